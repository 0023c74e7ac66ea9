#include "catalog_build.hpp"

// Golden classification data: the identification key (algebra class, isotropy
// type, complement type -> Petrov number), the equivalent-action pairs, the
// reductions of decomposable 4-D actions to 3-D ones, and the summary tables
// reproduced by the regression suites.

namespace petrov {
namespace catalog_detail {

namespace {

QVec q3(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }
QVec q4(long a, long b, long c, long d) {
  return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

PetrovKeyRow key_row(int gdim, const std::string& cls, std::vector<Cond> regime,
                     char iso, bool sym, bool ideal,
                     std::vector<std::string> ids) {
  PetrovKeyRow r;
  r.gdim = gdim;
  r.algebra_key = cls;
  r.regime = std::move(regime);
  r.iso = iso;
  r.symmetric = sym;
  r.ideal = ideal;
  r.ids = std::move(ids);
  return r;
}

SummaryRowG srow(const std::string& petrov, const std::string& display,
                 const std::string& key, Params params, QVec h0,
                 std::vector<QVec> comp, const std::string& flags,
                 const std::string& iso, const std::string& h0disp) {
  SummaryRowG r;
  r.petrov = petrov;
  r.algebra_display = display;
  r.algebra_key = key;
  r.sample_params = std::move(params);
  r.h0 = std::move(h0);
  r.complement = std::move(comp);
  r.comp_flags = flags;
  r.iso = iso;
  r.h0_display = h0disp;
  return r;
}

MetricsRow mrow(const std::string& display, const std::string& key,
                Params params, QVec rep, std::vector<QVec> comp,
                const std::string& flags, const std::string& iso,
                const std::string& petrov, const std::string& h0disp,
                const std::string& compdisp) {
  MetricsRow r;
  r.algebra_display = display;
  r.algebra_key = key;
  r.sample_params = std::move(params);
  r.rep = std::move(rep);
  r.complement = std::move(comp);
  r.comp_flags = flags;
  r.iso = iso;
  r.petrov = petrov;
  r.h0_display = h0disp;
  r.complement_display = compdisp;
  return r;
}

}  // namespace

void build_goldens(Catalog& cat) {
  // ------------------------------------------------------- identification key
  cat.petrov_key = {
      key_row(3, "L(3,4,0)", {}, 'R', true, true, {"30.1"}),
      key_row(3, "L(3,2,x)", {c_eq("x", -1)}, 'B', true, true,
              {"30.2", "30.8"}),
      key_row(3, "L(3,5)", {}, 'B', true, false, {"30.4", "30.5"}),
      key_row(3, "L(3,5)", {}, 'R', true, false, {"M"}),
      key_row(3, "L(3,6)", {}, 'R', true, false, {"30.6"}),

      key_row(4, "L(4,8)", {}, 'B', false, true, {"32.03"}),
      key_row(4, "L(4,11)", {}, 'R', false, true, {"32.04"}),
      key_row(4, "L(4,-2)", {}, 'B', false, true, {"32.05"}),
      key_row(4, "L(4,13)", {}, 'R', false, true, {"32.06"}),
      key_row(4, "L(4,-7)", {}, 'R', true, false, {"32.07"}),
      key_row(4, "L(4,-7)", {}, 'N', false, true, {"32.08"}),
      key_row(4, "L(4,-8)", {}, 'R', true, false, {"32.09"}),
      key_row(4, "L(4,-8)", {}, 'R', false, true, {"32.10"}),
      key_row(4, "L(4,-4,x)", {c_eq("x", -1)}, 'B', true, true, {"32.11(+)"}),
      key_row(4, "L(4,-6,x)", {c_eq("x", 0)}, 'R', true, true, {"32.11(-)"}),
      key_row(4, "L(4,1)", {}, 'N', true, true, {"32.12"}),
      key_row(4, "L(4,9,x)", {}, 'N', false, false, {"32.14(c!=0,1)"}),
      key_row(4, "L(4,7)", {}, 'N', false, true, {"32.14(c=1)"}),
      key_row(4, "L(4,8)", {}, 'N', true, false, {"32.14(c=0)"}),
      key_row(4, "L(4,10)", {}, 'N', false, false, {"32.15"}),
      key_row(4, "L(4,12,x)", {}, 'N', false, false, {"32.16(q!=0)"}),
      key_row(4, "L(4,11)", {}, 'N', true, false, {"32.16(q=0)"}),
      key_row(4, "L(4,-7)", {}, 'B', true, false, {"32.23(+)"}),
      key_row(4, "L(4,-7)", {}, 'B', false, true, {"32.24(+)"}),
      key_row(4, "L(4,-7)", {}, 'R', false, true, {"32.24(-)"}),
  };

  // -------------------------------------------------- equivalent group actions
  cat.equivalences = {
      {"30.2", "30.8"},
      {"30.4", "30.5"},
      {"32.03", "32.19"},
      {"32.04", "32.20"},
      {"32.05", "32.21"},
      {"32.06", "32.22"},
      {"32.07", "32.23(-)"},
      {"32.09", "32.25(e=0)"},
      {"32.10", "32.25(e=1)"},
      {"32.11(+)", "32.27(e=-1)"},
      {"32.11(-)", "32.27(e=+1)"},
  };

  // ------------------------------------------------------------- reductions
  {
    ReductionRow r1;
    r1.g4_key = "L(4,-4,x)";
    r1.g4_params = {{"x", -1}};
    r1.g3_key = "L(3,2,x)";
    r1.g3_params = {{"x", -1}};
    r1.h0 = q4(0, 0, 1, 0);
    r1.g4_petrov = "32.11(+)";
    r1.g3_petrov = "30.2";
    ReductionRow r2;
    r2.g4_key = "L(4,-6,x)";
    r2.g4_params = {{"x", 0}};
    r2.g3_key = "L(3,4,0)";
    r2.g3_params = {};
    r2.h0 = q4(0, 0, 1, 0);
    r2.g4_petrov = "32.11(-)";
    r2.g3_petrov = "30.1";
    ReductionRow r3;
    r3.g4_key = "L(4,-7)";
    r3.g3_key = "L(3,5)";
    r3.h0 = {Rational(1, 2), 0, Rational(1, 2), 0};
    r3.g4_petrov = "32.23(+)";
    r3.g3_petrov = "30.4";
    ReductionRow r4;
    r4.g4_key = "L(4,-7)";
    r4.g3_key = "L(3,5)";
    r4.h0 = {Rational(1, 2), 0, Rational(-1, 2), 0};
    r4.g4_petrov = "32.07";
    r4.g3_petrov = "M";
    ReductionRow r5;
    r5.g4_key = "L(4,-8)";
    r5.g3_key = "L(3,6)";
    r5.h0 = q4(1, 0, 0, 0);
    r5.g4_petrov = "32.09";
    r5.g3_petrov = "30.6";
    cat.reductions = {r1, r2, r3, r4, r5};
  }

  // ------------------------------------------- classification summary, G3
  {
    QVec half_p = {Rational(1, 2), 0, Rational(1, 2)};
    QVec half_m = {Rational(1, 2), 0, Rational(-1, 2)};
    std::vector<QVec> m35_p = {half_m, q3(0, 1, 0)};
    cat.summary_g3 = {
        srow("30.1", "L(3,4,0)", "L(3,4,0)", {}, q3(0, 0, 1),
             {q3(0, 1, 0), q3(1, 0, 0)}, "S,I", "R", "e3"),
        srow("30.2", "L(3,2,-1)", "L(3,2,x)", {{"x", -1}}, q3(0, 0, 1),
             {q3(1, 0, 0), q3(0, 1, 0)}, "S,I", "B", "e3"),
        srow("30.4", "L(3,5)", "L(3,5)", {}, half_p, m35_p, "S", "B",
             "1/2(e1+e3)"),
        srow("30.5", "L(3,5)", "L(3,5)", {}, half_p, m35_p, "S", "B",
             "1/2(e1+e3)"),
        srow("30.6", "L(3,6)", "L(3,6)", {}, q3(1, 0, 0),
             {q3(0, 0, 1), q3(0, 1, 0)}, "S", "R", "e1"),
        srow("30.8", "L(3,2,-1)", "L(3,2,x)", {{"x", -1}}, q3(0, 0, 1),
             {q3(1, 0, 0), q3(0, 1, 0)}, "S,I", "B", "e3"),
    };
  }

  // ------------------------------------------- classification summary, G4
  {
    QVec hp = {Rational(1, 2), 0, Rational(1, 2), 0};
    QVec hm = {Rational(1, 2), 0, Rational(-1, 2), 0};
    QVec hp4 = {Rational(1, 2), 0, Rational(1, 2), Rational(1, 2)};
    QVec hm4 = {Rational(1, 2), 0, Rational(-1, 2), Rational(1, 2)};
    QVec mhalf = {Rational(-1, 2), 0, Rational(-1, 2), 0};
    QVec e3half = {0, 0, Rational(1, 2), 0};
    cat.summary_g4 = {
        srow("32.03", "L(4,8)", "L(4,8)", {}, q4(0, 0, 0, 1),
             {q4(1, 0, 0, 0), q4(0, 1, 1, 0), q4(0, -1, 1, 0)}, "I", "B",
             "e4"),
        srow("32.04", "L(4,11)", "L(4,11)", {}, q4(0, 0, 0, 1),
             {q4(1, 0, 0, 0), q4(0, 1, 0, 0), q4(0, 0, -1, 0)}, "I", "R",
             "e4"),
        srow("32.05", "L(4,-2)", "L(4,-2)", {}, q4(0, 1, 0, -1),
             {q4(0, 0, 0, 1), q4(1, 0, 1, 0), q4(-1, 0, 1, 0)}, "I", "B",
             "e2-e4"),
        srow("32.06", "L(4,13)", "L(4,13)", {}, q4(0, 0, 0, 1),
             {q4(0, 0, 1, 0), q4(0, 1, 0, 0), q4(1, 0, 0, 0)}, "I", "R",
             "e4"),
        srow("32.07", "L(4,-7)", "L(4,-7)", {}, hm,
             {q4(0, 0, 0, 1), q4(0, 1, 0, 0), mhalf}, "S", "R",
             "1/2(e1-e3)"),
        srow("32.08", "L(4,-7)", "L(4,-7)", {}, q4(1, 0, 0, 1),
             {e3half, q4(0, -1, 0, 0), q4(1, 0, 0, 0)}, "I", "N", "e1+e4"),
        srow("32.09", "L(4,-8)", "L(4,-8)", {}, q4(1, 0, 0, 0),
             {q4(0, 0, 0, 1), q4(0, 0, 1, 0), q4(0, 1, 0, 0)}, "S", "R",
             "e1"),
        srow("32.10", "L(4,-8)", "L(4,-8)", {}, q4(1, 0, 0, 1),
             {q4(1, 0, 0, 0), q4(0, 0, 1, 0), q4(0, 1, 0, 0)}, "I", "R",
             "e1+e4"),
        srow("32.11(+)", "L(4,-4,-1)", "L(4,-4,x)", {{"x", -1}},
             q4(0, 0, 1, 0),
             {q4(0, 0, 0, 1), q4(1, 1, 0, 0), q4(-1, 1, 0, 0)}, "S,I", "B",
             "e3"),
        srow("32.11(-)", "L(4,-6,0)", "L(4,-6,x)", {{"x", 0}}, q4(0, 0, 1, 0),
             {q4(0, 0, 0, 1), q4(0, 1, 0, 0), q4(1, 0, 0, 0)}, "S,I", "R",
             "e3"),
        srow("32.12", "L(4,1)", "L(4,1)", {}, q4(0, 0, 0, 1),
             {q4(0, 0, -1, 0), q4(0, 1, 0, 0), q4(1, 0, 0, 0)}, "S,I", "N",
             "e4"),
        srow("32.14(c!=0,1)", "L(4,9,x=c-1)", "L(4,9,x)",
             {{"x", Rational(-1, 2)}}, q4(0, 1, 1, 0),
             {{0, 0, 0, Rational(2, 3)},
              {0, Rational(2, 3), Rational(-1, 3), 0},
              q4(1, 0, 0, 0)},
             "", "N", "e2+e3"),
        srow("32.14(c=1)", "L(4,7)", "L(4,7)", {}, q4(0, 1, 1, 0),
             {q4(0, 0, 0, 1), q4(0, 1, 0, 0), q4(1, 0, 0, 0)}, "I", "N",
             "e2+e3"),
        srow("32.14(c=0)", "L(4,8)", "L(4,8)", {}, q4(0, 1, 1, 0),
             {q4(0, 0, 0, 1), q4(0, 1, -1, 0), q4(2, 0, 0, 0)}, "S", "N",
             "e2+e3"),
        srow("32.15", "L(4,10)", "L(4,10)", {}, q4(0, 0, 1, 0),
             {q4(0, 0, 0, 1), q4(0, 1, 1, 0), q4(1, 0, 0, 0)}, "", "N", "e3"),
        srow("32.16(q!=0)", "L(4,12,x=sqrt(q^2/(4-q^2)))", "L(4,12,x)",
             {{"x", 1}}, q4(0, 1, 0, 0),
             {q4(0, 0, 0, 1), q4(0, 1, -1, 0), q4(1, 0, 0, 0)}, "", "N",
             "e2"),
        srow("32.16(q=0)", "L(4,11)", "L(4,11)", {}, q4(0, 1, 0, 0),
             {q4(0, 0, 0, -1), q4(0, 0, 1, 0), q4(-1, 0, 0, 0)}, "S", "N",
             "e2"),
        srow("32.23(+)", "L(4,-7)", "L(4,-7)", {}, hp,
             {q4(0, 0, 0, 1), q4(0, 1, 0, 0),
              {Rational(1, 2), 0, Rational(-1, 2), 0}},
             "S", "B", "1/2(e1+e3)"),
        srow("32.24(+)", "L(4,-7)", "L(4,-7)", {}, hp4,
             {q4(1, 0, 1, 0), q4(0, 2, 0, 0), q4(1, 0, -1, 0)}, "I", "B",
             "1/2(e1+e3+e4)"),
        srow("32.24(-)", "L(4,-7)", "L(4,-7)", {}, hm4,
             {q4(1, 0, -1, 0), q4(0, -2, 0, 0), q4(1, 0, 1, 0)}, "I", "R",
             "1/2(e1-e3+e4)"),
        srow("32.26", "L(4,-3)", "", {}, {}, {}, "", "", "N/A"),
    };
  }

  // --------------------------------------------- summary of invariant metrics
  {
    QVec hp = {Rational(1, 2), 0, Rational(1, 2)};
    QVec hm = {Rational(1, 2), 0, Rational(-1, 2)};
    cat.metrics_summary = {
        mrow("L(3,2,-1)", "L(3,2,x)", {{"x", -1}}, q3(0, 0, 1),
             {q3(1, 0, 0), q3(0, 1, 0)}, "S,I", "B", "30.2", "e3", "e1, e2"),
        mrow("L(3,4,0)", "L(3,4,0)", {}, q3(0, 0, 1),
             {q3(0, 1, 0), q3(1, 0, 0)}, "S,I", "R", "30.1", "e3", "e2, e1"),
        mrow("L(3,5)", "L(3,5)", {}, hp,
             {{Rational(1, 2), 0, Rational(-1, 2)}, q3(0, 1, 0)}, "S", "B",
             "30.4", "1/2(e1+e3)", "1/2(e1-e3), e2"),
        mrow("L(3,5)", "L(3,5)", {}, hp,
             {{Rational(1, 2), 0, Rational(-1, 2)}, q3(0, 1, 0)}, "S", "B",
             "30.5", "1/2(e1+e3)", "1/2(e1-e3), e2"),
        mrow("L(3,5)", "L(3,5)", {}, hm,
             {{Rational(1, 2), 0, Rational(1, 2)}, q3(0, 1, 0)}, "S", "R", "M",
             "1/2(e1-e3)", "1/2(e1+e3), e2"),
        mrow("L(3,6)", "L(3,6)", {}, q3(1, 0, 0), {q3(0, 0, 1), q3(0, 1, 0)},
             "S", "R", "30.6", "e1", "e3, e2"),

        mrow("L(4,1)", "L(4,1)", {}, q4(0, 0, 0, 1),
             {q4(0, 0, -1, 0), q4(0, 1, 0, 0), q4(1, 0, 0, 0)}, "S,I", "N",
             "32.12", "e4", "-e3, e2, e1"),
        mrow("L(4,7)", "L(4,7)", {}, q4(0, 1, 1, 0),
             {q4(0, 0, 0, 1), q4(0, 1, 0, 0), q4(1, 0, 0, 0)}, "I", "N",
             "32.14(c=1)", "e2+e3", "e4, e2, e1"),
        mrow("L(4,8)", "L(4,8)", {}, q4(0, 1, 1, 0),
             {q4(0, 0, 0, 1), q4(0, 1, -1, 0), q4(2, 0, 0, 0)}, "S", "N",
             "32.14(c=0)", "e2+e3", "e4, e2-e3, 2e1"),
        mrow("L(4,8)", "L(4,8)", {}, q4(0, 0, 0, 1),
             {q4(1, 0, 0, 0), q4(0, 1, 1, 0), q4(0, -1, 1, 0)}, "I", "B",
             "32.03", "e4", "e1, e2+e3, -e2+e3"),
        mrow("L(4,9,x), x!=1", "L(4,9,x)", {{"x", Rational(-1, 2)}},
             q4(0, 1, 1, 0),
             {{0, 0, 0, Rational(2, 3)},
              {0, Rational(2, 3), Rational(-1, 3), 0},
              q4(1, 0, 0, 0)},
             "", "N", "32.14(c!=0,1)", "e2+e3",
             "1/(1-x) e4, 1/(1-x) e2 + x/(1-x) e3, e1"),
        mrow("L(4,10)", "L(4,10)", {}, q4(0, 0, 1, 0),
             {q4(0, 0, 0, 1), q4(0, 1, 1, 0), q4(1, 0, 0, 0)}, "", "N",
             "32.15", "e3", "e4, e2+e3, e1"),
        mrow("L(4,11)", "L(4,11)", {}, q4(0, 1, 0, 0),
             {q4(0, 0, 0, -1), q4(0, 0, 1, 0), q4(-1, 0, 0, 0)}, "S", "N",
             "32.16(q=0)", "e2", "-e4, e3, -e1"),
        mrow("L(4,11)", "L(4,11)", {}, q4(0, 0, 0, 1),
             {q4(1, 0, 0, 0), q4(0, 1, 0, 0), q4(0, 0, -1, 0)}, "I", "R",
             "32.04", "e4", "e1, e2, -e3"),
        mrow("L(4,12,x)", "L(4,12,x)", {{"x", 1}}, q4(0, 1, 0, 0),
             {q4(0, 0, 0, 1), q4(0, 1, -1, 0), q4(1, 0, 0, 0)}, "", "N",
             "32.16(q!=0)", "e2", "e4, xe2-e3, e1"),
        mrow("L(4,13)", "L(4,13)", {}, q4(0, 0, 0, 1),
             {q4(0, 0, 1, 0), q4(0, 1, 0, 0), q4(1, 0, 0, 0)}, "I", "R",
             "32.06", "e4", "e3, e2, e1"),
        mrow("L(4,-2)", "L(4,-2)", {}, q4(0, 1, 0, -1),
             {q4(0, 0, 0, 1), q4(1, 0, 1, 0), q4(-1, 0, 1, 0)}, "I", "B",
             "32.05", "e2-e4", "e4, e1+e3, -e1+e3"),
        mrow("L(4,-4,-1)", "L(4,-4,x)", {{"x", -1}}, q4(0, 0, 1, 0),
             {q4(0, 0, 0, 1), q4(1, 1, 0, 0), q4(-1, 1, 0, 0)}, "S,I", "B",
             "32.11(+)", "e3", "e4, e1+e2, -e1+e2"),
        mrow("L(4,-6,0)", "L(4,-6,x)", {{"x", 0}}, q4(0, 0, 1, 0),
             {q4(0, 0, 0, 1), q4(0, 1, 0, 0), q4(1, 0, 0, 0)}, "S,I", "R",
             "32.11(-)", "e3", "e4, e2, e1"),
        mrow("L(4,-7)", "L(4,-7)", {}, {Rational(1, 2), 0, Rational(1, 2), 0},
             {q4(0, 0, 0, 1), q4(0, 1, 0, 0),
              {Rational(1, 2), 0, Rational(-1, 2), 0}},
             "S", "B", "32.23(+)", "1/2(e1+e3)", "e4, e2, 1/2(e1-e3)"),
        mrow("L(4,-7)", "L(4,-7)", {}, {Rational(1, 2), 0, Rational(-1, 2), 0},
             {q4(0, 0, 0, 1), q4(0, 1, 0, 0),
              {Rational(-1, 2), 0, Rational(-1, 2), 0}},
             "S", "R", "32.07", "1/2(e1-e3)", "e4, e2, -1/2(e1+e3)"),
        mrow("L(4,-7)", "L(4,-7)", {}, q4(1, 0, 0, 1),
             {{0, 0, Rational(1, 2), 0}, q4(0, -1, 0, 0), q4(1, 0, 0, 0)},
             "I", "N", "32.08", "e1+e4", "1/2 e3, -e2, e1"),
        mrow("L(4,-7)", "L(4,-7)", {},
             {Rational(1, 2), 0, Rational(1, 2), Rational(1, 2)},
             {q4(1, 0, 1, 0), q4(0, 2, 0, 0), q4(1, 0, -1, 0)}, "I", "B",
             "32.24(+)", "1/2(e1+e3+e4)", "e1+e3, 2e2, e1-e3"),
        mrow("L(4,-7)", "L(4,-7)", {},
             {Rational(1, 2), 0, Rational(-1, 2), Rational(1, 2)},
             {q4(1, 0, -1, 0), q4(0, -2, 0, 0), q4(1, 0, 1, 0)}, "I", "R",
             "32.24(-)", "1/2(e1-e3+e4)", "e1-e3, -2e2, e1+e3"),
        mrow("L(4,-8)", "L(4,-8)", {}, q4(1, 0, 0, 0),
             {q4(0, 0, 0, 1), q4(0, 0, 1, 0), q4(0, 1, 0, 0)}, "S", "R",
             "32.09", "e1", "e4, e3, e2"),
        mrow("L(4,-8)", "L(4,-8)", {}, q4(1, 0, 0, 1),
             {q4(1, 0, 0, 0), q4(0, 0, 1, 0), q4(0, 1, 0, 0)}, "I", "R",
             "32.10", "e1+e4", "e1, e3, e2"),
    };
  }
}

}  // namespace catalog_detail
}  // namespace petrov
