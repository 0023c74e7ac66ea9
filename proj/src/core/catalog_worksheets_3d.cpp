#include "catalog_build.hpp"

// Subalgebra worksheets for the 3-dimensional algebras: inequivalent 1-D
// subalgebra representatives with complements and invariant-form data,
// the automorphism generators, the Adjoint invariants, and the case-by-case
// reduction pipelines. Compositions are printed right to left, so step lists
// appear innermost first; the projective scaling comes last.

namespace petrov {
namespace catalog_detail {

void build_worksheets_3d(Catalog& cat) {
  // ---------------------------------------------------------------- L(3,1)
  {
    auto& w = ws(cat, "L(3,1)");
    w.rows = {
        row(v3(1, 0, 0), {cvh(v3(0, 1, 0), "c1"), cvh(v3(0, 0, 1), "c2")}, "S",
            2, {"Q"}),
        row(v3(0, 1, 0), {cvh(v3(0, 0, 1), "c"), cv(v3(1, 0, 0))}, "SI", 1,
            {"D1"}),
    };
    w.gens = {
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1], v[2]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] - t * v[1], v[1], v[2]};
            }),
        gen("O1", GenKind::Outer,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], s_cos(t) * v[1] + s_sin(t) * v[2],
                          SC(-1) * s_sin(t) * v[1] + s_cos(t) * v[2]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[1]; }},
        {"J", [](const SVec& v, const Params&) { return v[2]; }},
    };
    w.cases = {
        cse(
            "1",
            [](const QVec& v, const Params&) {
              return !(v[1] * v[1] + v[2] * v[2]).is_zero();
            },
            {step("A2",
                  [](const QVec& v, const Params&) {
                    Rational s = v[1] * v[1] + v[2] * v[2];
                    return SC(-1) * Scalar(v[0] * v[2] / s);
                  }),
             step("A3",
                  [](const QVec& v, const Params&) {
                    Rational s = v[1] * v[1] + v[2] * v[2];
                    return Scalar(v[0] * v[1] / s);
                  }),
             step("O1",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational s = v[1] * v[1] + v[2] * v[2];
                    return s_sqrt(Scalar(s)) / SC(sign_pm(v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && v[2].is_zero();
            },
            {step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------- L(3,2,x), x!=1
  {
    auto& w = ws(cat, "L(3,2,x)");
    w.rows = {
        row(v3(1, 0, 0), {cvh(v3(0, 1, 0), "c1"), cvh(v3(0, 0, 1), "c2")}, "",
            2, {"Q"}),
        row(v3(0, 1, 0), {cvh(v3(1, 0, 0), "c1"), cvh(v3(0, 0, 1), "c2")}, "",
            2, {"Q"}),
        row(v3(0, 0, 1), {cv(v3(1, 0, 0)), cv(v3(0, 1, 0))}, "SI", 0, {"Z"}, {},
            {c_ne("x", -1)}),
        row(v3(0, 0, 1), {cv(v3(1, 0, 0)), cv(v3(0, 1, 0))}, "SI", 0, {"B"},
            {"30.2", "30.8"}, {c_eq("x", -1)}),
        row(v3(1, 1, 0), {cvh(v3(0, 0, 1), "c"), cv(v3(1, PX(), 0))}, "R", 1,
            {"D1"}, {}, {c_ne("x", -1)}),
        row(v3(1, 1, 0), {cvh(v3(0, 0, 1), "c"), cv(v3(1, -1, 0))}, "S", 1,
            {"D1"}, {}, {c_eq("x", -1)}),
    };
    // The x = -1 isotropy row lists B; the literal invariant form on the
    // (e1, e2) complement is the off-diagonal form, congruent to B.
    w.rows[3].congruence_only = true;
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1], v[2]};
            }),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              return SVec{v[0], v[1] + t * Scalar(p.at("x")) * v[2], v[2]};
            }),
        gen("S1", GenKind::ScaleOne,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] / t, v[1], v[2]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[2].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar(v[0] / v[2]);
                  }),
             step("A2",
                  [](const QVec& v, const Params& p) {
                    return SC(-1) * Scalar(v[1] / (p.at("x") * v[2]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[0].is_zero() && !v[1].is_zero();
            },
            {step("S1",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[0] / v[1]);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{1, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[0].is_zero() && !v[1].is_zero();
            },
            {step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[0].is_zero() && v[1].is_zero();
            },
            {step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0}; }),
    };
  }

  // -------------------------------------------------------------- L(3,2,1)
  {
    auto& w = ws(cat, "L(3,2,1)");
    w.rows = {
        row(v3(1, 0, 0), {cvh(v3(0, 1, 0), "c1"), cvh(v3(0, 0, 1), "c2")}, "",
            2, {"Q"}),
        row(v3(0, 0, 1), {cv(v3(1, 0, 0)), cv(v3(0, 1, 0))}, "SI", 0, {"Z"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1], v[2]};
            }),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], v[1] + t * v[2], v[2]};
            }),
        gen("O1", GenKind::Outer,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{s_cos(t) * v[0] + s_sin(t) * v[1],
                          SC(-1) * s_sin(t) * v[0] + s_cos(t) * v[1], v[2]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return !v[2].is_zero() || !v[0].is_zero();
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[2].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar(v[0] / v[2]);
                  }),
             step("A2",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar(v[1] / v[2]);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1}; }),
        cse(
            "2", [](const QVec& v, const Params&) { return v[2].is_zero(); },
            {step("O1",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational s = v[0] * v[0] + v[1] * v[1];
                    return s_sqrt(Scalar(s)) / SC(sign_pm(v[0]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(3,3)
  {
    auto& w = ws(cat, "L(3,3)");
    w.rows = {
        row(v3(1, 0, 0), {cvh(v3(0, 1, 0), "c1"), cvh(v3(0, 0, 1), "c2")}, "",
            2, {"Q"}),
        row(v3(0, 1, 0), {cvh(v3(0, 0, 1), "c"), cv(v3(1, 1, 0))}, "R", 1,
            {"D1"}),
        row(v3(0, 0, 1), {cv(v3(1, 0, 0)), cv(v3(0, 1, 0))}, "SI", 0, {"Z"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1], v[2]};
            }),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1] + t * v[2], v[2]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              Scalar f = s_exp(-t);
              return SVec{f * (v[0] - t * v[1]), f * v[1], v[2]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[2].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] - v[0]) / v[2]);
                  }),
             step("A2",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar(v[1] / v[2]);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[1].is_zero();
            },
            {step("A3",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[0] / v[1]);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1]) * s_exp(SC(-1) * Scalar(v[0] / v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[1].is_zero();
            },
            {step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------- L(3,4,x), x>0
  {
    auto& w = ws(cat, "L(3,4,x)");
    w.rows = {
        row(v3(1, 0, 0), {cvh(v3(0, 0, 1), "c"), cv(v3(PX(), -1, 0))}, "R", 1,
            {"D1"}),
        row(v3(0, 0, 1), {cv(v3(1, 0, 0)), cv(v3(0, 1, 0))}, "SI", 0, {"Z"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              return SVec{v[0] + t * Scalar(p.at("x")) * v[2], v[1] - t * v[2],
                          v[2]};
            }),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              return SVec{v[0] + t * v[2], v[1] + t * Scalar(p.at("x")) * v[2],
                          v[2]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              Scalar f = s_exp(SC(-1) * t * Scalar(p.at("x")));
              return SVec{f * (s_cos(t) * v[0] - s_sin(t) * v[1]),
                          f * (s_sin(t) * v[0] + s_cos(t) * v[1]), v[2]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      // Case 2 rotates by arctan(y2/y1); y1 = 0 sits on its singular set.
      return !v[2].is_zero() || !v[0].is_zero();
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[2].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params& p) {
                    Rational x = p.at("x");
                    return Scalar((v[1] - x * v[0]) / (v[2] * (x * x + 1)));
                  }),
             step("A2",
                  [](const QVec& v, const Params& p) {
                    Rational x = p.at("x");
                    return SC(-1) *
                           Scalar((v[0] + x * v[1]) / (v[2] * (x * x + 1)));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1}; }),
        cse(
            "2", [](const QVec& v, const Params&) { return v[2].is_zero(); },
            {step("A3",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params& p) {
                    Rational s = v[0] * v[0] + v[1] * v[1];
                    Scalar theta = s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                    return s_sqrt(Scalar(s)) / SC(sign_pm(v[0])) *
                           s_exp(Scalar(p.at("x")) * theta);
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0}; }),
    };
  }

  // -------------------------------------------------------------- L(3,4,0)
  {
    auto& w = ws(cat, "L(3,4,0)");
    w.rows = {
        row(v3(1, 0, 0), {cvh(v3(0, 0, 1), "c"), cv(v3(0, -1, 0))}, "S", 1,
            {"D1"}),
        row(v3(0, 0, 1), {cv(v3(0, 1, 0)), cv(v3(1, 0, 0))}, "SI", 0, {"R"},
            {"30.1"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], v[1] - t * v[2], v[2]};
            }),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1], v[2]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{s_cos(t) * v[0] - s_sin(t) * v[1],
                          s_sin(t) * v[0] + s_cos(t) * v[1], v[2]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return !v[2].is_zero() || !v[0].is_zero();
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[2].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1] / v[2]);
                  }),
             step("A2",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar(v[0] / v[2]);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1}; }),
        cse(
            "2", [](const QVec& v, const Params&) { return v[2].is_zero(); },
            {step("A3",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational s = v[0] * v[0] + v[1] * v[1];
                    return s_sqrt(Scalar(s)) / SC(sign_pm(v[0]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(3,5)
  {
    auto& w = ws(cat, "L(3,5)");
    w.rows = {
        row(v3(1, 0, 0), {cvh(v3(0, 0, 1), "c1"), cvh(v3(0, -2, 0), "c2")}, "",
            1, {"D1"}),
        row(v3(P(1, 2), 0, P(1, 2)),
            {cv(v3(P(1, 2), 0, P(-1, 2))), cv(v3(0, 1, 0))}, "S", 0, {"B"},
            {"30.4", "30.5"}),
        row(v3(P(1, 2), 0, P(-1, 2)),
            {cv(v3(P(1, 2), 0, P(1, 2))), cv(v3(0, 1, 0))}, "S", 0, {"R"},
            {"M"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[1] - t * t * v[2],
                          v[1] - SC(2) * t * v[2], v[2]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], SC(2) * t * v[0] + v[1],
                          SC(-1) * t * t * v[0] - t * v[1] + v[2]};
            }),
        gen("S1^3", GenKind::ScalePair,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] / t, v[1], t * v[2]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I",
         [](const SVec& v, const Params&) {
           return SC(4) * v[0] * v[2] + v[1] * v[1];
         }},
    };
    w.cases = {
        cse(
            "1",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + v[1] * v[1];
              return !I.is_zero() && !v[2].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1] / (2 * v[2]));
                  }),
             step("S1^3",
                  [](const QVec& v, const Params&) {
                    Rational I = 4 * v[0] * v[2] + v[1] * v[1];
                    return SC(1, 2) * s_sqrt(Scalar(rat_abs(I))) / Scalar(v[2]);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational I = 4 * v[0] * v[2] + v[1] * v[1];
                    return Scalar(I) / s_sqrt(Scalar(rat_abs(I)));
                  })},
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + v[1] * v[1];
              return QVec{RR(1, 2), 0, RR(sign_pm(I), 2)};
            }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + v[1] * v[1];
              return !I.is_zero() && v[2].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] - 2 * v[0]) / (2 * v[1]));
                  }),
             step("A3", [](const QVec&, const Params&) { return SC(-1); }),
             step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) {
              return QVec{RR(1, 2), 0, RR(1, 2)};
            }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + v[1] * v[1];
              return I.is_zero() && !v[0].is_zero();
            },
            {step("A3",
                  [](const QVec& v, const Params&) {
                    return SC(-1, 2) * Scalar(v[1] / v[0]);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + v[1] * v[1];
              return I.is_zero() && v[0].is_zero();
            },
            {step("A1", [](const QVec&, const Params&) { return SC(1); }),
             step("A3", [](const QVec&, const Params&) { return SC(-1); }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar(v[2]);
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(3,6)
  {
    auto& w = ws(cat, "L(3,6)");
    w.rows = {
        row(v3(1, 0, 0), {cv(v3(0, 0, 1)), cv(v3(0, 1, 0))}, "S", 0, {"R"},
            {"30.6"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], s_cos(t) * v[1] - s_sin(t) * v[2],
                          s_sin(t) * v[1] + s_cos(t) * v[2]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{s_cos(t) * v[0] - s_sin(t) * v[1],
                          s_sin(t) * v[0] + s_cos(t) * v[1], v[2]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I",
         [](const SVec& v, const Params&) {
           return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
         }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return !v[0].is_zero() && !v[1].is_zero();
    };
    w.cases = {
        cse(
            "1", [](const QVec&, const Params&) { return true; },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("A3",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(v[1] * v[1] + v[2] * v[2]));
                    return SC(-1) * s_arctan_ratio(
                                        rho, Scalar(v[0]) * SC(sign_pm(v[1])));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational I = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
                    return s_sqrt(Scalar(I)) / SC(sign_pm(v[0]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0}; }),
    };
  }

  // --------------------------------------------------------------- L(3,-1)
  {
    auto& w = ws(cat, "L(3,-1)");
    w.rows = {
        row(v3(1, 0, 0), {cvh(v3(0, 1, 0), "c1"), cvh(v3(0, 0, 1), "c2")}, "",
            2, {"Q"}),
        row(v3(0, 1, 0), {cv(v3(0, 0, 1)), cv(v3(1, 0, 0))}, "SI", 1, {"D1"}),
        row(v3(0, 0, 1), {cv(v3(1, 0, 0)), cvh(v3(0, 1, 0), "c")}, "I", 2,
            {"Q"}),
        row(v3(1, 0, 1), {cvh(v3(0, 1, 0), "c"), cv(v3(1, 0, 0))}, "I", 1,
            {"D1"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[1], v[1], v[2]};
            }),
        gen("O1", GenKind::Outer,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], v[1], v[2] + t * v[1]};
            }),
        gen("S1", GenKind::ScaleOne,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] / t, v[1], v[2]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[1]; }},
        {"J", [](const SVec& v, const Params&) { return v[2]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[1].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar(v[0] / v[1]);
                  }),
             step("O1",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar(v[2] / v[1]);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && !v[0].is_zero() && !v[2].is_zero();
            },
            {step("S1",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[0] / v[2]);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 1}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && !v[0].is_zero() && v[2].is_zero();
            },
            {step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && v[0].is_zero() && !v[2].is_zero();
            },
            {step("lambda",
                  [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1}; }),
    };
  }
}

}  // namespace catalog_detail
}  // namespace petrov
