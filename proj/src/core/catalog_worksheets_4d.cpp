#include "catalog_build.hpp"

// Subalgebra worksheets for the 4-dimensional algebras. Layout follows the
// 3-dimensional file: rows, generators, Adjoint invariants, case pipelines
// (innermost step first, projective scaling last).

namespace petrov {
namespace catalog_detail {

namespace {

// Ad generators of the common shear shape y^i += t * coef * y^j.
GenFn shear(int i, int j, long num = 1, long den = 1) {
  return [i, j, num, den](const Scalar& t, const SVec& v, const Params&) {
    SVec out = v;
    out[i] = out[i] + t * SC(num, den) * v[j];
    return out;
  };
}

GenFn shear_param(int i, int j, const char* name) {
  std::string pname = name;
  return [i, j, pname](const Scalar& t, const SVec& v, const Params& p) {
    SVec out = v;
    out[i] = out[i] + t * Scalar(p.at(pname)) * v[j];
    return out;
  };
}

GenFn scale_slot(int i) {
  return [i](const Scalar& t, const SVec& v, const Params&) {
    SVec out = v;
    out[i] = out[i] / t;
    return out;
  };
}

// Rotation in the (i, j) plane: y^i' = cos t y^i + sin t y^j.
GenFn rot(int i, int j) {
  return [i, j](const Scalar& t, const SVec& v, const Params&) {
    SVec out = v;
    out[i] = s_cos(t) * v[i] + s_sin(t) * v[j];
    out[j] = SC(-1) * s_sin(t) * v[i] + s_cos(t) * v[j];
    return out;
  };
}

Rational sq(const Rational& a) { return a * a; }

}  // namespace

void build_worksheets_4d(Catalog& cat) {
  // ---------------------------------------------------------------- L(4,1)
  {
    auto& w = ws(cat, "L(4,1)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "R", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, 0, 1, 0)), cv(v4(1, 0, 0, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cv(v4(1, 0, 0, 0)), cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, 1, 0, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(0, 0, -1, 0)), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))},
            "SI", 1, {"D1", "N"}, {"32.12"}),
    };
    w.gens = {
        gen("A2", GenKind::Inner, shear(0, 3)),
        gen("A3", GenKind::Inner, shear(1, 3)),
        gen("A4", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] - t * v[1] + SC(1, 2) * t * t * v[2],
                          v[1] - t * v[2], v[2], v[3]};
            }),
        gen("O1", GenKind::Outer, shear(2, 3)),
        gen("O2", GenKind::Outer, shear(0, 2)),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[3]); }),
             step("A3", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("O1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return !v[2].is_zero() && v[3].is_zero();
            },
            {step("A4", [](const QVec& v, const Params&) { return Scalar(v[1] / v[2]); }),
             step("O2",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar((v[0] * v[2] - sq(v[1]) / 2) / sq(v[2]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[3].is_zero() && !v[1].is_zero();
            },
            {step("A4", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[3].is_zero() && v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------- L(4,2,x,y), x != y, x != 1
  {
    auto& w = ws(cat, "L(4,2,x,y)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(1, 0, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(1, 0, 0, 0), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "SI",
            0, {"Z"}, {}, {c_sum_ne("y", "x", 0), c_ne("y", -1)}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 1, 0)), cv(v4(0, -1, 1, 0))},
            "SI", 0, {"B"}, {}, {c_sum_eq("y", "x", 0)}),
        row(v4(0, 0, 0, 1),
            {cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 1, 0)), cv(v4(-1, 0, 1, 0))},
            "SI", 0, {"B"}, {}, {c_eq("y", -1), c_sum_ne("y", "x", 0)}),
        row(v4(1, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cv(v4(1, PX(), 0, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(1, 0, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cv(v4(1, 0, PY(), 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 1, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(1, 0, 0, 0), "c2"),
             cv(v4(0, PX(), PY(), 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(1, 1, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cv(v4(1, PX(), PY(), 0))},
            "R", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 3)),
        gen("A2", GenKind::Inner, shear_param(1, 3, "x")),
        gen("A3", GenKind::Inner, shear_param(2, 3, "y")),
        gen("S1", GenKind::ScaleOne, scale_slot(0)),
        gen("S2", GenKind::ScaleOne, scale_slot(1)),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[3]); }),
             step("A2",
                  [](const QVec& v, const Params& p) {
                    return SC(-1) * Scalar(v[1] / (p.at("x") * v[3]));
                  }),
             step("A3",
                  [](const QVec& v, const Params& p) {
                    return SC(-1) * Scalar(v[2] / (p.at("y") * v[3]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[0].is_zero() && v[1].is_zero() &&
                     v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[0].is_zero() && v[1].is_zero() &&
                     !v[2].is_zero();
            },
            {step("S1", [](const QVec& v, const Params&) { return Scalar(v[0] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 1, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[0].is_zero() && !v[1].is_zero() &&
                     v[2].is_zero();
            },
            {step("S1", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{1, 1, 0, 0}; }),
        cse(
            "5",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[0].is_zero() && !v[1].is_zero() &&
                     !v[2].is_zero();
            },
            {step("S1", [](const QVec& v, const Params&) { return Scalar(v[0] / v[2]); }),
             step("S2", [](const QVec& v, const Params&) { return Scalar(v[1] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{1, 1, 1, 0}; }),
        cse(
            "6",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[0].is_zero() && v[1].is_zero() &&
                     !v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "7",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[0].is_zero() && !v[1].is_zero() &&
                     v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "8",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[0].is_zero() && !v[1].is_zero() &&
                     !v[2].is_zero();
            },
            {step("S2", [](const QVec& v, const Params&) { return Scalar(v[1] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 1, 0}; }),
    };
  }

  // ---------------------------------------------------- L(4,2,x,x), x != 1
  {
    auto& w = ws(cat, "L(4,2,x,x)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(1, 0, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(0, 0, 1, 0)), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))}, "SI",
            0, {"Z"}),
        row(v4(1, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cv(v4(1, PX(), 0, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 3)),
        gen("A2", GenKind::Inner, shear_param(1, 3, "x")),
        gen("A3", GenKind::Inner, shear_param(2, 3, "x")),
        gen("O1", GenKind::Outer, rot(1, 2)),
        gen("S1", GenKind::ScaleOne, scale_slot(0)),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return !v[3].is_zero() || !v[1].is_zero() || v[2].is_zero();
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[3]); }),
             step("A2",
                  [](const QVec& v, const Params& p) {
                    return SC(-1) * Scalar(v[1] / (p.at("x") * v[3]));
                  }),
             step("A3",
                  [](const QVec& v, const Params& p) {
                    return SC(-1) * Scalar(v[2] / (p.at("x") * v[3]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !(sq(v[1]) + sq(v[2])).is_zero() &&
                     !v[0].is_zero();
            },
            {step("O1",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("S1",
                  [](const QVec& v, const Params&) {
                    return SC(sign_pm(v[1])) * Scalar(v[0]) /
                           s_sqrt(Scalar(sq(v[1]) + sq(v[2])));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return s_sqrt(Scalar(sq(v[1]) + sq(v[2]))) /
                           SC(sign_pm(v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 1, 0, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !(sq(v[1]) + sq(v[2])).is_zero() &&
                     v[0].is_zero();
            },
            {step("O1",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return s_sqrt(Scalar(sq(v[1]) + sq(v[2]))) /
                           SC(sign_pm(v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------- L(4,2,1,y), y != 1
  {
    auto& w = ws(cat, "L(4,2,1,y)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(1, 0, 0, 0), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "SI",
            0, {"Z"}, {}, {c_ne("y", -1)}),
        row(v4(0, 0, 0, 1),
            {cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 1, 0)), cv(v4(-1, 0, 1, 0))},
            "SI", 0, {"Q12+Q13", "B"}, {}, {c_eq("y", -1)}),
        row(v4(1, 0, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cv(v4(1, 0, PY(), 0))},
            "R", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 3)),
        gen("A2", GenKind::Inner, shear(1, 3)),
        gen("A3", GenKind::Inner, shear_param(2, 3, "y")),
        gen("O1", GenKind::Outer, rot(0, 1)),
        gen("S1", GenKind::ScaleOne, scale_slot(0)),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return !v[3].is_zero() || !v[0].is_zero() || v[1].is_zero();
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[3]); }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("A3",
                  [](const QVec& v, const Params& p) {
                    return SC(-1) * Scalar(v[2] / (p.at("y") * v[3]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !(sq(v[0]) + sq(v[1])).is_zero() &&
                     !v[2].is_zero();
            },
            {step("O1",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                  }),
             step("S1",
                  [](const QVec& v, const Params&) {
                    return s_sqrt(Scalar(sq(v[0]) + sq(v[1]))) /
                           (SC(sign_pm(v[0])) * Scalar(v[2]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !(sq(v[0]) + sq(v[1])).is_zero() &&
                     v[2].is_zero();
            },
            {step("O1",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return s_sqrt(Scalar(sq(v[0]) + sq(v[1]))) /
                           SC(sign_pm(v[0]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[0].is_zero() && v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
    };
  }

  // -------------------------------------------------------------- L(4,2,1,1)
  {
    auto& w = ws(cat, "L(4,2,1,1)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "SI",
            0, {"Z"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 3)),
        gen("A2", GenKind::Inner, shear(1, 3)),
        gen("A3", GenKind::Inner, shear(2, 3)),
        gen("O1", GenKind::Outer, rot(0, 1)),
        gen("O2", GenKind::Outer, rot(1, 2)),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return !v[3].is_zero() || (!v[0].is_zero() && !v[1].is_zero());
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[3]); }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("A3", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2", [](const QVec& v, const Params&) { return v[3].is_zero(); },
            {step("O2",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("O1",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(sq(v[1]) + sq(v[2])));
                    return s_arctan_ratio(rho,
                                          SC(sign_pm(v[1])) * Scalar(v[0]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[0]) + sq(v[1]) + sq(v[2]);
                    return s_sqrt(Scalar(I)) / SC(sign_pm(v[0]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,3)
  {
    auto& w = ws(cat, "L(4,3)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "R", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, 0, 1, 0)), cv(v4(1, 0, 0, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(1, 0, 0, 0), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "SI",
            1, {"D2"}),
        row(v4(1, 0, 1, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 0, 1), "c2"),
             cv(v4(0, 0, 1, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 1, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, 0, 1, 0)), cv(v4(1, 0, 1, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A2", GenKind::Inner, shear(0, 3)),
        gen("A3", GenKind::Inner, shear(2, 3)),
        gen("A4", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] - t * v[1], v[1], s_exp(-t) * v[2], v[3]};
            }),
        gen("O1", GenKind::Outer, shear(1, 3)),
        gen("S3", GenKind::ScaleOne, scale_slot(2)),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[1]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[3]); }),
             step("A3", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[3]); }),
             step("O1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return !v[1].is_zero() && v[3].is_zero() && !v[2].is_zero();
            },
            {step("A4", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("S3",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[2] / v[1]) *
                           s_exp(SC(-1) * Scalar(v[0] / v[1]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return !v[1].is_zero() && v[3].is_zero() && v[2].is_zero();
            },
            {step("A4", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && v[3].is_zero() && v[0].is_zero() &&
                     !v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "5",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && v[3].is_zero() && !v[0].is_zero() &&
                     v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
        cse(
            "6",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && v[3].is_zero() && !v[0].is_zero() &&
                     !v[2].is_zero();
            },
            {step("S3", [](const QVec& v, const Params&) { return Scalar(v[2] / v[0]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 1, 0}; }),
    };
  }

  // ------------------------------------------------------ L(4,4,x), x != 1
  {
    auto& w = ws(cat, "L(4,4,x)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cv(v4(1, 1, 0, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(1, 0, 0, 0), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "SI",
            0, {"Z"}, {}, {c_ne("x", -1)}),
        row(v4(0, 0, 0, 1),
            {cv(v4(2, 0, 0, 0)), cv(v4(-1, 1, 1, 0)), cv(v4(0, -1, 1, 0))},
            "SI", 0, {"B"}, {}, {c_eq("x", -1)}),
        row(v4(1, 0, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cv(v4(1, 0, PX(), 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 1, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(1, 0, 0, 0), "c2"),
             cv(v4(1, 1, PX(), 0))},
            "R", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 3)),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[3], v[1] + t * v[3], v[2], v[3]};
            }),
        gen("A3", GenKind::Inner, shear_param(2, 3, "x")),
        gen("A4", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              Scalar f = s_exp(-t);
              Scalar g = s_exp(SC(-1) * t * Scalar(p.at("x")));
              return SVec{f * (v[0] - t * v[1]), f * v[1], g * v[2], v[3]};
            }),
        gen("S3", GenKind::ScaleOne, scale_slot(2)),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] - v[0]) / v[3]);
                  }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("A3",
                  [](const QVec& v, const Params& p) {
                    return SC(-1) * Scalar(v[2] / (p.at("x") * v[3]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[1].is_zero() && !v[2].is_zero();
            },
            {step("A4", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("S3",
                  [](const QVec& v, const Params& p) {
                    Scalar t = Scalar(v[0] / v[1]);
                    return Scalar(v[2] / v[1]) *
                           s_exp(SC(-1) * t * Scalar(p.at("x") - 1));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1]) * s_exp(SC(-1) * Scalar(v[0] / v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[1].is_zero() && v[2].is_zero();
            },
            {step("A4", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1]) * s_exp(SC(-1) * Scalar(v[0] / v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && v[0].is_zero() &&
                     !v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "5",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && !v[0].is_zero() &&
                     v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
        cse(
            "6",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && !v[0].is_zero() &&
                     !v[2].is_zero();
            },
            {step("S3", [](const QVec& v, const Params&) { return Scalar(v[2] / v[0]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 1, 0}; }),
    };
  }

  // -------------------------------------------------------------- L(4,4,1)
  {
    auto& w = ws(cat, "L(4,4,1)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cv(v4(1, 1, 0, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(1, 0, 0, 0), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "SI",
            0, {"Z"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 3)),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[3], v[1] + t * v[3], v[2], v[3]};
            }),
        gen("A3", GenKind::Inner, shear(2, 3)),
        gen("A4", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              Scalar f = s_exp(-t);
              return SVec{f * (v[0] - t * v[1]), f * v[1], f * v[2], v[3]};
            }),
        gen("O1", GenKind::Outer, shear(0, 2)),
        gen("O2", GenKind::Outer, shear(2, 1)),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] - v[0]) / v[3]);
                  }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("A3", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[1].is_zero();
            },
            {step("A4", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("O2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[1]); }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1]) * s_exp(SC(-1) * Scalar(v[0] / v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && !v[2].is_zero();
            },
            {step("O1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
    };
  }

  // ------------------------------------------------------------ L(4,5,x,y)
  {
    auto& w = ws(cat, "L(4,5,x,y)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(1, 0, 0, 0), "c2"),
             cv(v4(0, PY(), -1, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "SI",
            0, {"Z"}),
        row(v4(1, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(1, 0, 0, 0), "c2"),
             cv(v4(PX(), PY(), -1, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear_param(0, 3, "x")),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              return SVec{v[0], v[1] + t * Scalar(p.at("y")) * v[3],
                          v[2] - t * v[3], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              return SVec{v[0], v[1] + t * v[3],
                          v[2] + t * Scalar(p.at("y")) * v[3], v[3]};
            }),
        gen("A4", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              Scalar fx = s_exp(SC(-1) * t * Scalar(p.at("x")));
              Scalar fy = s_exp(SC(-1) * t * Scalar(p.at("y")));
              return SVec{fx * v[0], fy * (s_cos(t) * v[1] - s_sin(t) * v[2]),
                          fy * (s_sin(t) * v[1] + s_cos(t) * v[2]), v[3]};
            }),
        gen("S1", GenKind::ScaleOne, scale_slot(0)),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params& p) {
                    return SC(-1) * Scalar(v[0] / (p.at("x") * v[3]));
                  }),
             step("A2",
                  [](const QVec& v, const Params& p) {
                    Rational yy = p.at("y");
                    return Scalar((v[2] - yy * v[1]) / ((yy * yy + 1) * v[3]));
                  }),
             step("A3",
                  [](const QVec& v, const Params& p) {
                    Rational yy = p.at("y");
                    return SC(-1) *
                           Scalar((v[1] + yy * v[2]) / ((yy * yy + 1) * v[3]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !(sq(v[1]) + sq(v[2])).is_zero() &&
                     !v[0].is_zero();
            },
            {step("A4",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("S1",
                  [](const QVec& v, const Params& p) {
                    Scalar theta = s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                    Scalar rho = s_sqrt(Scalar(sq(v[1]) + sq(v[2])));
                    return SC(sign_pm(v[1])) * Scalar(v[0]) / rho *
                           s_exp(theta * Scalar(p.at("x") - p.at("y")));
                  }),
             step("lambda",
                  [](const QVec& v, const Params& p) {
                    Scalar theta = s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                    Scalar rho = s_sqrt(Scalar(sq(v[1]) + sq(v[2])));
                    return rho / SC(sign_pm(v[1])) *
                           s_exp(theta * Scalar(p.at("y")));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 1, 0, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !(sq(v[1]) + sq(v[2])).is_zero() &&
                     v[0].is_zero();
            },
            // The printed pipeline fixes the angle at pi/2 (the y2 = 0
            // slice); the general angle follows the Case 2 rotation.
            {step("A4",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params& p) {
                    Scalar theta = s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                    Scalar rho = s_sqrt(Scalar(sq(v[1]) + sq(v[2])));
                    return rho / SC(sign_pm(v[1])) *
                           s_exp(theta * Scalar(p.at("y")));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,6)
  {
    auto& w = ws(cat, "L(4,6)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cv(v4(1, 1, 0, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(1, 0, 0, 0), "c2"),
             cv(v4(0, 1, 1, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "SI",
            0, {"Z"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 3)),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[3], v[1] + t * v[3], v[2], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], v[1] + t * v[3], v[2] + t * v[3], v[3]};
            }),
        gen("A4", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              Scalar f = s_exp(-t);
              return SVec{f * (v[0] - t * v[1] + SC(1, 2) * t * t * v[2]),
                          f * (v[1] - t * v[2]), f * v[2], v[3]};
            }),
        gen("O1", GenKind::Outer, shear(0, 2)),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar((v[0] - v[1] + v[2]) / v[3]);
                  }),
             step("A2",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[2] - v[1]) / v[3]);
                  }),
             step("A3", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[2].is_zero();
            },
            {step("A4", [](const QVec& v, const Params&) { return Scalar(v[1] / v[2]); }),
             step("O1",
                  [](const QVec& v, const Params&) {
                    return Scalar((sq(v[1]) / 2 - v[0] * v[2]) / sq(v[2]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[2]) * s_exp(SC(-1) * Scalar(v[1] / v[2]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[2].is_zero() && !v[1].is_zero();
            },
            {step("A4", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1]) * s_exp(SC(-1) * Scalar(v[0] / v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[2].is_zero() && v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,7)
  {
    auto& w = ws(cat, "L(4,7)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(1, 0, 0, 0), "c3")},
            "", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, 1, 0, 0)), cv(v4(-1, 0, 0, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 0, 1),
            {cvh(v4(0, 0, 1, 0), "c"), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))},
            "I", 1, {"D1"}),
        row(v4(0, 1, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))},
            "I", 1, {"D1", "N"}, {"32.14(c=1)"}),
        row(v4(0, 0, 1, 1),
            {cvh(v4(0, 0, 1, 0), "c"), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))},
            "I", 1, {"D1"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 3)),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1] + t * v[3], v[2], v[3]};
            }),
        gen("A3", GenKind::Inner, shear(0, 1, -1)),
        gen("S13", GenKind::ScaleTwo,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] / t, v[1], v[2] / t, v[3]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1",
            [](const QVec& v, const Params&) {
              return !v[2].is_zero() && !v[3].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] * v[2] - v[0] * v[3]) / sq(v[3]));
                  }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("S13", [](const QVec& v, const Params&) { return Scalar(v[2] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[3].is_zero();
            },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[3]); }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return !v[2].is_zero() && v[3].is_zero() && !v[1].is_zero();
            },
            {step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[2]); }),
             step("S13", [](const QVec& v, const Params&) { return Scalar(v[2] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 1, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return !v[2].is_zero() && v[3].is_zero() && v[1].is_zero();
            },
            {step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "5",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[3].is_zero() && !v[1].is_zero();
            },
            {step("A3", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "6",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[3].is_zero() && v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,8)
  {
    auto& w = ws(cat, "L(4,8)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "R", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(1, 0, 0, 0), "c3")},
            "", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cvh(v4(-1, 0, 0, 0), "c3")},
            "", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 1, 0)), cv(v4(0, -1, 1, 0))}, "I",
            1, {"D1", "B"}, {"32.03"}),
        row(v4(0, 1, 1, 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(0, 1, -1, 0)), cv(v4(2, 0, 0, 0))}, "S",
            1, {"D1", "N"}, {"32.14(c=0)"}),
    };
    w.gens = {
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1] + t * v[3], v[2], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] - t * v[1], v[1], v[2] - t * v[3], v[3]};
            }),
        gen("O1", GenKind::Outer, shear(0, 3)),
        gen("S12", GenKind::ScaleTwo,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] / t, v[1] / t, v[2], v[3]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"I",
         [](const SVec& v, const Params&) { return v[1] * v[2] - v[0] * v[3]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("A3", [](const QVec& v, const Params&) { return Scalar(v[2] / v[3]); }),
             step("O1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] * v[2] - v[0] * v[3]) / sq(v[3]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return !(v[1] * v[2] - v[0] * v[3]).is_zero() && v[3].is_zero();
            },
            {step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[2]); }),
             step("S12", [](const QVec& v, const Params&) { return Scalar(v[1] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return (v[1] * v[2] - v[0] * v[3]).is_zero() && v[3].is_zero() &&
                     v[1].is_zero() && !v[2].is_zero();
            },
            {step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return (v[1] * v[2] - v[0] * v[3]).is_zero() && v[3].is_zero() &&
                     !v[1].is_zero() && v[2].is_zero();
            },
            {step("A3", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "5",
            [](const QVec& v, const Params&) {
              return (v[1] * v[2] - v[0] * v[3]).is_zero() && v[3].is_zero() &&
                     v[1].is_zero() && v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------- L(4,9,x), -1 < x <= 1, x != 0, 1
  {
    auto& w = ws(cat, "L(4,9,x)");
    ParamExpr inv_1mx = pe_over(ParamExpr(1), ParamExpr(1) - PX());
    ParamExpr x_over_1mx = pe_over(PX(), ParamExpr(1) - PX());
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(1, 0, 0, 0), "c3")},
            "", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cvh(v4(-1, 0, 0, 0), "c3")},
            "", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "I",
            0, {"Z"}),
        row(v4(0, 1, 1, 0),
            {cvh(v4(0, 0, 0, inv_1mx), "c"), cv(v4(0, inv_1mx, x_over_1mx, 0)),
             cv(v4(1, 0, 0, 0))},
            "R", 1, {"D1", "N"}, {"32.14(c!=0,1)"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              SVec out = v;
              out[0] = out[0] + t * Scalar(p.at("x") + 1) * v[3];
              return out;
            }),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1] + t * v[3], v[2], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              return SVec{v[0] - t * v[1], v[1],
                          v[2] + t * Scalar(p.at("x")) * v[3], v[3]};
            }),
        gen("S12", GenKind::ScaleTwo,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] / t, v[1] / t, v[2], v[3]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params& p) {
                    return Scalar((v[1] * v[2] - v[0] * v[3]) /
                                  ((1 + p.at("x")) * sq(v[3])));
                  }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("A3",
                  [](const QVec& v, const Params& p) {
                    return SC(-1) * Scalar(v[2] / (p.at("x") * v[3]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && !v[2].is_zero();
            },
            {step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[1].is_zero() && !v[2].is_zero();
            },
            {step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[2]); }),
             step("S12", [](const QVec& v, const Params&) { return Scalar(v[1] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 1, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[1].is_zero() && v[2].is_zero();
            },
            {step("A3", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "5",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // -------------------------------------------------------------- L(4,9,1)
  {
    auto& w = ws(cat, "L(4,9,1)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(1, 0, 0, 0), "c3")},
            "", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "I",
            0, {"Z"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 3, 2)),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1] + t * v[3], v[2], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] - t * v[1], v[1], v[2] + t * v[3], v[3]};
            }),
        gen("O1", GenKind::Outer, rot(1, 2)),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return !v[3].is_zero() || !v[1].is_zero() ||
             (v[1].is_zero() && v[2].is_zero());
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] * v[2] - v[0] * v[3]) / (2 * sq(v[3])));
                  }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("A3", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !(sq(v[1]) + sq(v[2])).is_zero();
            },
            {step("A2",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[1]) + sq(v[2]);
                    return SC(-1) * Scalar(v[0] * v[2] / I);
                  }),
             step("A3",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[1]) + sq(v[2]);
                    return Scalar(v[0] * v[1] / I);
                  }),
             step("O1",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[1]) + sq(v[2]);
                    return s_sqrt(Scalar(I)) / SC(sign_pm(v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,10)
  {
    auto& w = ws(cat, "L(4,10)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(1, 0, 0, 0), "c3")},
            "", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, 1, 1, 0)), cv(v4(1, 0, 0, 0))},
            "R", 1, {"D1", "N"}, {"32.15"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "I",
            0, {"Z"}),
    };
    w.gens = {
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1] + t * v[3], v[2], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] - t * v[1] - SC(1, 2) * t * t * v[3],
                          v[1] + t * v[3], v[2] + t * v[3], v[3]};
            }),
        gen("A4", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              Scalar f = s_exp(-t);
              return SVec{s_exp(SC(-2) * t) * v[0], f * (v[1] - t * v[2]),
                          f * v[2], v[3]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A2",
                  [](const QVec& v, const Params&) {
                    Rational r =
                        2 * v[0] * v[3] - 2 * v[1] * v[2] + 3 * sq(v[2]);
                    return Scalar(r / (4 * v[3]) - (v[1] - v[2]) / v[3]);
                  }),
             step("A3", [](const QVec& v, const Params&) { return Scalar(1) / Scalar(v[3]); }),
             step("A2",
                  [](const QVec& v, const Params&) {
                    Rational r =
                        2 * v[0] * v[3] - 2 * v[1] * v[2] + 3 * sq(v[2]);
                    return SC(-1, 4) * Scalar(r / v[3]);
                  }),
             step("A3",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar((1 + v[2]) / v[3]);
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !v[2].is_zero();
            },
            {step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[2]); }),
             step("A4", [](const QVec& v, const Params&) { return Scalar(v[1] / v[2]); }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[2]) * s_exp(SC(-1) * Scalar(v[1] / v[2]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[2].is_zero() && !v[1].is_zero();
            },
            {step("A3", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[2].is_zero() && v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,11)
  {
    auto& w = ws(cat, "L(4,11)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "R", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cv(v4(0, 0, 0, -1)), cv(v4(0, 0, 1, 0)), cv(v4(-1, 0, 0, 0))},
            "S", 1, {"D1", "N"}, {"32.16(q=0)"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, -1, 0))}, "I",
            1, {"D1", "R"}, {"32.04"}),
    };
    w.gens = {
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2] - SC(1, 2) * t * t * v[3], v[1],
                          v[2] - t * v[3], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] - t * v[1] - SC(1, 2) * t * t * v[3],
                          v[1] + t * v[3], v[2], v[3]};
            }),
        gen("A4", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], s_cos(t) * v[1] - s_sin(t) * v[2],
                          s_sin(t) * v[1] + s_cos(t) * v[2], v[3]};
            }),
        gen("O1", GenKind::Outer, shear(0, 3)),
        lambda_gen(),
    };
    w.invariants = {
        {"I",
         [](const SVec& v, const Params&) {
           return SC(2) * v[0] * v[3] + v[1] * v[1] + v[2] * v[2];
         }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      if (!v[3].is_zero()) return true;
      return (sq(v[1]) + sq(v[2])).is_zero() || !v[1].is_zero();
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A2", [](const QVec& v, const Params&) { return Scalar(v[2] / v[3]); }),
             step("A3", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[3]); }),
             step("O1",
                  [](const QVec& v, const Params&) {
                    Rational I = 2 * v[0] * v[3] + sq(v[1]) + sq(v[2]);
                    return SC(-1, 2) * Scalar(I / sq(v[3]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !(sq(v[1]) + sq(v[2])).is_zero();
            },
            {step("A2",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[1]) + sq(v[2]);
                    return SC(-1) * Scalar(v[0] * v[2] / I);
                  }),
             step("A3",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[1]) + sq(v[2]);
                    return Scalar(v[0] * v[1] / I);
                  }),
             step("A4",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[1]) + sq(v[2]);
                    return s_sqrt(Scalar(I)) / SC(sign_pm(v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ------------------------------------------------------ L(4,12,x), x > 0
  {
    auto& w = ws(cat, "L(4,12,x)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, PX(), -1, 0)),
             cv(v4(1, 0, 0, 0))},
            "R", 1, {"D1", "N"}, {"32.16(q!=0)"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "I",
            0, {"Z"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              SVec out = v;
              out[0] = out[0] + SC(2) * t * Scalar(p.at("x")) * v[3];
              return out;
            }),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              return SVec{v[0] + t * v[2] - SC(1, 2) * t * t * v[3],
                          v[1] + t * Scalar(p.at("x")) * v[3], v[2] - t * v[3],
                          v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              return SVec{v[0] - t * v[1] - SC(1, 2) * t * t * v[3],
                          v[1] + t * v[3], v[2] + t * Scalar(p.at("x")) * v[3],
                          v[3]};
            }),
        gen("A4", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              Scalar f = s_exp(SC(-1) * t * Scalar(p.at("x")));
              return SVec{f * f * v[0], f * (s_cos(t) * v[1] - s_sin(t) * v[2]),
                          f * (s_sin(t) * v[1] + s_cos(t) * v[2]), v[3]};
            }),
        lambda_gen(),
    };
    w.invariants = {
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      if (!v[3].is_zero()) return true;
      return (sq(v[1]) + sq(v[2])).is_zero() || !v[1].is_zero();
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[3].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params& p) {
                    Rational x = p.at("x");
                    Rational x2p1 = x * x + 1;
                    Rational r = 2 * v[0] * v[3] * x2p1 * x2p1 +
                                 sq(v[2]) * (3 * x * x + 1) +
                                 (sq(v[1]) + 2 * v[1] * v[2] * x) * (1 - x * x);
                    return SC(-1, 4) *
                           Scalar(r / (x * x2p1 * x2p1 * sq(v[3])));
                  }),
             step("A2",
                  [](const QVec& v, const Params& p) {
                    Rational x = p.at("x");
                    return Scalar((v[2] - x * v[1]) / ((x * x + 1) * v[3]));
                  }),
             step("A3",
                  [](const QVec& v, const Params& p) {
                    Rational x = p.at("x");
                    return SC(-1) *
                           Scalar((v[1] + x * v[2]) / ((x * x + 1) * v[3]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && !(sq(v[1]) + sq(v[2])).is_zero();
            },
            {step("A2",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[1]) + sq(v[2]);
                    return SC(-1) * Scalar(v[0] * v[2] / I);
                  }),
             step("A3",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[1]) + sq(v[2]);
                    return Scalar(v[0] * v[1] / I);
                  }),
             step("A4",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params& p) {
                    Rational I = sq(v[1]) + sq(v[2]);
                    Scalar theta = s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                    return s_sqrt(Scalar(I)) / SC(sign_pm(v[1])) *
                           s_exp(theta * Scalar(p.at("x")));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[3].is_zero() && v[1].is_zero() && v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,13)
  {
    auto& w = ws(cat, "L(4,13)");
    {
      WorksheetRow r1 = row(v4(1, 0, 0, 0),
                            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
                             cvh(v4(0, -1, 0, 0), "c3")},
                            "", 2, {"D1", "D2", "Q12"});
      WorksheetRow r2 = row(v4(0, 0, 1, PK()),
                            {cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, 1, 0, 0)),
                             cv(v4(1, 0, 0, 0))},
                            "I", 1, {"D1"});
      r2.family_param = "k";
      WorksheetRow r3 = row(v4(0, 0, 0, 1),
                            {cvh(v4(0, 0, 1, 0), "c"), cv(v4(0, 1, 0, 0)),
                             cv(v4(1, 0, 0, 0))},
                            "I", 1, {"D1", "R"}, {"32.06"});
      w.rows = {r1, r2, r3};
    }
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1] - t * v[3], v[2], v[3]};
            }),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[3], v[1] + t * v[2], v[2], v[3]};
            }),
        gen("A4", GenKind::Inner, rot(1, 0)),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return !v[2].is_zero() || !v[3].is_zero() || !v[0].is_zero();
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[2].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    Rational s = sq(v[2]) + sq(v[3]);
                    return SC(-1) * Scalar((v[0] * v[2] - v[1] * v[3]) / s);
                  }),
             step("A2",
                  [](const QVec& v, const Params&) {
                    Rational s = sq(v[2]) + sq(v[3]);
                    return SC(-1) * Scalar((v[0] * v[3] + v[1] * v[2]) / s);
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec& v, const Params&) {
              return QVec{0, 0, 1, v[3] / v[2]};
            }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[3].is_zero();
            },
            {step("A1", [](const QVec& v, const Params&) { return Scalar(v[1] / v[3]); }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[3].is_zero();
            },
            {step("A4",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational s = sq(v[0]) + sq(v[1]);
                    return s_sqrt(Scalar(s)) / SC(sign_pm(v[0]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,-1)
  {
    auto& w = ws(cat, "L(4,-1)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(0, 0, 1, 0)), cv(v4(1, 0, 0, 0))}, "SI",
            2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cv(v4(1, 0, 0, 0)), cvh(v4(0, 1, 0, 0), "c1"),
             cvh(v4(0, 0, 0, 1), "c2")},
            "I", 3, {"Q"}),
        row(v4(1, 0, 1, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
             cv(v4(1, 0, 0, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 1)),
        gen("O1", GenKind::Outer, shear(2, 1)),
        gen("O2", GenKind::Outer, shear(3, 1)),
        gen("O3", GenKind::Outer,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], v[1], s_cos(t) * v[2] + s_sin(t) * v[3],
                          SC(-1) * s_sin(t) * v[2] + s_cos(t) * v[3]};
            }),
        gen("S1", GenKind::ScaleOne, scale_slot(0)),
        lambda_gen(),
    };
    w.invariants = {
        {"H", [](const SVec& v, const Params&) { return v[1]; }},
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      if (!v[1].is_zero()) return true;
      return (sq(v[2]) + sq(v[3])).is_zero() || !v[2].is_zero();
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[1].is_zero(); },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[1]); }),
             step("O1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[1]); }),
             step("O2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[3] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && !(sq(v[2]) + sq(v[3])).is_zero() &&
                     !v[0].is_zero();
            },
            {step("O3",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[3]), Scalar(v[2]));
                  }),
             step("S1",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(sq(v[2]) + sq(v[3])));
                    return SC(sign_pm(v[2])) * Scalar(v[0]) / rho;
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(sq(v[2]) + sq(v[3])));
                    return rho / SC(sign_pm(v[2]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && !(sq(v[2]) + sq(v[3])).is_zero() &&
                     v[0].is_zero();
            },
            {step("O3",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[3]), Scalar(v[2]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(sq(v[2]) + sq(v[3])));
                    return rho / SC(sign_pm(v[2]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && v[2].is_zero() && v[3].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,-2)
  {
    auto& w = ws(cat, "L(4,-2)");
    {
      WorksheetRow family =
          row(v4(0, 1, 0, PK()),
              {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
               cv(v4(1, 0, 0, 0))},
              "I", 1, {"D1"});
      family.family_param = "k";
      family.family_excluded = {-1, 0};
      w.rows = {
          row(v4(1, 0, 0, 0),
              {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
               cvh(v4(0, 0, 0, 1), "c3")},
              "", 3, {"Q"}),
          row(v4(0, 1, 0, 0),
              {cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, 0, 1, 0)), cv(v4(1, 0, 0, 0))},
              "I", 2, {"D1", "D2", "Q12"}),
          row(v4(0, 0, 1, 0),
              {cvh(v4(1, 0, 0, 0), "c1"), cvh(v4(0, 1, 0, 0), "c2"),
               cvh(v4(0, 0, 0, 1), "c3")},
              "", 3, {"Q"}),
          row(v4(0, 0, 0, 1),
              {cv(v4(1, 0, 0, 0)), cvh(v4(0, 1, 0, 0), "c"), cv(v4(0, 0, 1, 0))},
              "I", 2, {"D1", "D2", "Q12"}),
          row(v4(1, 0, 1, 0),
              {cvh(v4(0, 1, 0, 1), "c1"), cvh(v4(0, -1, 0, 0), "c2"),
               cvh(v4(0, 0, 1, 0), "c3")},
              "", 2, {"D1", "D2", "Q12"}),
          row(v4(0, 1, 1, 0),
              {cvh(v4(0, 0, 0, 1), "c"), cv(v4(0, 0, 1, 0)), cv(v4(1, 0, 0, 0))},
              "I", 1, {"D1"}),
          row(v4(1, 0, 0, 1),
              {cvh(v4(0, 1, 0, 0), "c"), cv(v4(1, 0, 0, 0)), cv(v4(0, 0, 1, 0))},
              "I", 1, {"D1"}),
          family,
          row(v4(0, 1, 0, -1),
              {cvh(v4(0, 0, 0, 1), "c1"), cv(v4(1, 0, 1, 0)),
               cv(v4(-1, 0, 1, 0))},
              "I", 1, {"D1", "B"}, {"32.05"}),
      };
    }
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 1)),
        gen("A3", GenKind::Inner, shear(2, 3)),
        gen("S1", GenKind::ScaleOne, scale_slot(0)),
        gen("S3", GenKind::ScaleOne, scale_slot(2)),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[1]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1",
            [](const QVec& v, const Params&) {
              return !v[1].is_zero() && !v[3].is_zero();
            },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[1]); }),
             step("A3", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec& v, const Params&) {
              return QVec{0, 1, 0, v[3] / v[1]};
            }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return !v[1].is_zero() && v[3].is_zero() && !v[2].is_zero();
            },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[1]); }),
             step("S3", [](const QVec& v, const Params&) { return Scalar(v[2] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 1, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return !v[1].is_zero() && v[3].is_zero() && v[2].is_zero();
            },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && !v[3].is_zero() && !v[0].is_zero();
            },
            {step("A3", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[3]); }),
             step("S1", [](const QVec& v, const Params&) { return Scalar(v[0] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 1}; }),
        cse(
            "5",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && !v[3].is_zero() && v[0].is_zero();
            },
            {step("A3", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[2] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "6",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && v[3].is_zero() &&
                     !(v[0] * v[2]).is_zero();
            },
            {step("S1", [](const QVec& v, const Params&) { return Scalar(v[0] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 1, 0}; }),
        cse(
            "7",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && v[3].is_zero() && !v[0].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
        cse(
            "8",
            [](const QVec& v, const Params&) {
              return v[1].is_zero() && v[3].is_zero() && !v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,-3)
  {
    auto& w = ws(cat, "L(4,-3)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "S", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cv(v4(0, 0, 0, 1)), cvh(v4(0, 0, 1, 0), "c"), cv(v4(1, 0, 0, 0))},
            "SI", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cvh(v4(0, 1, 0, 0), "c1"),
             cvh(v4(0, 0, 1, 0), "c2")},
            "I", 3, {"Q"}),
    };
    w.gens = {
        gen("A2", GenKind::Inner, shear(0, 2)),
        gen("A3", GenKind::Inner, shear(0, 1, -1)),
        gen("O1", GenKind::Outer, shear(0, 3)),
        gen("O2", GenKind::Outer, rot(1, 2)),
        gen("O3", GenKind::Outer, shear(3, 1)),
        lambda_gen(),
    };
    w.invariants = {
        {"H", [](const SVec& v, const Params&) { return v[1]; }},
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return (sq(v[1]) + sq(v[2])).is_zero() || !v[1].is_zero();
    };
    w.cases = {
        cse(
            "1",
            [](const QVec& v, const Params&) {
              return !(sq(v[1]) + sq(v[2])).is_zero();
            },
            {step("A2",
                  [](const QVec& v, const Params&) {
                    Rational s = sq(v[1]) + sq(v[2]);
                    return SC(-1) * Scalar(v[0] * v[2] / s);
                  }),
             step("A3",
                  [](const QVec& v, const Params&) {
                    Rational s = sq(v[1]) + sq(v[2]);
                    return Scalar(v[0] * v[1] / s);
                  }),
             step("O2",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("O3",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(sq(v[1]) + sq(v[2])));
                    return SC(-sign_pm(v[1])) * Scalar(v[3]) / rho;
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(sq(v[1]) + sq(v[2])));
                    return rho / SC(sign_pm(v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return (sq(v[1]) + sq(v[2])).is_zero() && !v[3].is_zero();
            },
            {step("O1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return (sq(v[1]) + sq(v[2])).is_zero() && v[3].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------- L(4,-4,x), x != 1
  {
    auto& w = ws(cat, "L(4,-4,x)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(1, 0, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 1, 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))}, "SI",
            1, {"D1"}, {}, {c_ne("x", -1)}),
        row(v4(0, 0, 1, 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(1, 1, 0, 0)), cv(v4(-1, 1, 0, 0))},
            "SI", 1, {"D1", "B"}, {"32.11(+)"}, {c_eq("x", -1)}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cvh(v4(0, 0, 1, 0), "c")},
            "I", 3, {"Q"}),
        row(v4(1, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cv(v4(1, PX(), 0, 0))},
            "R", 2, {"D1", "D2", "Q12"}, {}, {c_ne("x", -1)}),
        row(v4(1, 1, 0, 0),
            {cv(v4(0, 0, 0, 1)), cvh(v4(0, 0, 1, 0), "c"), cv(v4(1, -1, 0, 0))},
            "S", 2, {"D1", "D2", "Q12"}, {}, {c_eq("x", -1)}),
        row(v4(1, 0, 0, 1),
            {cv(v4(0, 1, 0, 0)), cvh(v4(0, 0, 1, 0), "c"), cv(v4(1, 0, 0, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 1, 0, 1),
            {cv(v4(1, 0, 0, 0)), cvh(v4(0, 0, 1, 0), "c"),
             cv(v4(0, PX(), 0, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
        row(v4(1, 1, 0, 1),
            {cvh(v4(0, 0, 1, 0), "c"), cv(v4(1, 0, 0, 0)),
             cv(v4(1, PX(), 0, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 2)),
        gen("A2", GenKind::Inner, shear_param(1, 2, "x")),
        gen("O1", GenKind::Outer, shear(3, 2)),
        gen("S1", GenKind::ScaleOne, scale_slot(0)),
        gen("S2", GenKind::ScaleOne, scale_slot(1)),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[2].is_zero(); },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[2]); }),
             step("A2",
                  [](const QVec& v, const Params& p) {
                    return SC(-1) * Scalar(v[1] / (p.at("x") * v[2]));
                  }),
             step("O1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[3] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[3].is_zero() && !v[0].is_zero() &&
                     !v[1].is_zero();
            },
            {step("S1", [](const QVec& v, const Params&) { return Scalar(v[0] / v[3]); }),
             step("S2", [](const QVec& v, const Params&) { return Scalar(v[1] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{1, 1, 0, 1}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[3].is_zero() && !v[0].is_zero() &&
                     v[1].is_zero();
            },
            {step("S1", [](const QVec& v, const Params&) { return Scalar(v[0] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 1}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[3].is_zero() && v[0].is_zero() &&
                     !v[1].is_zero();
            },
            {step("S2", [](const QVec& v, const Params&) { return Scalar(v[1] / v[3]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 1}; }),
        cse(
            "5",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[3].is_zero() && v[0].is_zero() &&
                     v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "6",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[3].is_zero() && !v[0].is_zero() &&
                     !v[1].is_zero();
            },
            {step("S1", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{1, 1, 0, 0}; }),
        cse(
            "7",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[3].is_zero() && !v[0].is_zero() &&
                     v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
        cse(
            "8",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[3].is_zero() && v[0].is_zero() &&
                     !v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
    };
  }

  // -------------------------------------------------------------- L(4,-4,1)
  {
    auto& w = ws(cat, "L(4,-4,1)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 0, 1, 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))}, "SI",
            1, {"D1"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cvh(v4(0, 0, 1, 0), "c")},
            "I", 3, {"Q"}),
        row(v4(1, 0, 0, 1),
            {cv(v4(0, 1, 0, 0)), cvh(v4(0, 0, 1, 0), "c"), cv(v4(1, 0, 0, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 2)),
        gen("A2", GenKind::Inner, shear(1, 2)),
        gen("O1", GenKind::Outer, shear(3, 2)),
        gen("O2", GenKind::Outer, rot(0, 1)),
        gen("S1", GenKind::ScaleOne, scale_slot(0)),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return !v[2].is_zero() || !v[0].is_zero() ||
             (v[0].is_zero() && v[1].is_zero());
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[2].is_zero(); },
            {step("A1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[0] / v[2]); }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[2]); }),
             step("O1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[3] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !(sq(v[0]) + sq(v[1])).is_zero() &&
                     !v[3].is_zero();
            },
            {step("O2",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                  }),
             step("S1",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(sq(v[0]) + sq(v[1])));
                    return rho / (SC(sign_pm(v[0])) * Scalar(v[3]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 1}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !(sq(v[0]) + sq(v[1])).is_zero() &&
                     v[3].is_zero();
            },
            {step("O2",
                  [](const QVec& v, const Params&) {
                    return s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(sq(v[0]) + sq(v[1])));
                    return rho / SC(sign_pm(v[0]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[0].is_zero() && v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,-5)
  {
    auto& w = ws(cat, "L(4,-5)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 1, 0, 0), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 0, 0, 1), "c3")},
            "", 3, {"Q"}),
        row(v4(0, 1, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cv(v4(1, 1, 0, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))}, "SI",
            1, {"D1"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cvh(v4(0, 0, 1, 0), "c")},
            "I", 3, {"Q"}),
        row(v4(1, 0, 0, 1),
            {cvh(v4(0, 0, 1, 0), "c"), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 1, 0, 1),
            {cv(v4(1, 1, 0, 1)), cvh(v4(0, 0, 1, 0), "c"), cv(v4(1, 1, 0, 0))},
            "R", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner, shear(0, 2)),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[2], v[1] + t * v[2], v[2], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              Scalar f = s_exp(-t);
              return SVec{f * (v[0] - t * v[1]), f * v[1], v[2], v[3]};
            }),
        gen("O1", GenKind::Outer, shear(3, 2)),
        gen("S4", GenKind::ScaleOne, scale_slot(3)),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[2].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] - v[0]) / v[2]);
                  }),
             step("A2", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[1] / v[2]); }),
             step("O1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[3] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[3].is_zero() && !v[1].is_zero();
            },
            {step("A3", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("S4",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[3] / v[1]) * s_exp(Scalar(v[0] / v[1]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1]) * s_exp(SC(-1) * Scalar(v[0] / v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 1}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[3].is_zero() && !v[0].is_zero() &&
                     v[1].is_zero();
            },
            {step("S4", [](const QVec& v, const Params&) { return Scalar(v[3] / v[0]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 1}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[3].is_zero() && v[0].is_zero() &&
                     v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "5",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[3].is_zero() && !v[1].is_zero();
            },
            {step("A3", [](const QVec& v, const Params&) { return Scalar(v[0] / v[1]); }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1]) * s_exp(SC(-1) * Scalar(v[0] / v[1]));
                  })},
            [](const QVec&, const Params&) { return QVec{0, 1, 0, 0}; }),
        cse(
            "6",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[3].is_zero() && v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ------------------------------------------------------ L(4,-6,x), x >= 0
  {
    auto& w = ws(cat, "L(4,-6,x)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cv(v4(PX(), -1, 0, 0))},
            "R", 2, {"D1", "D2", "Q12"}, {}, {c_ne("x", 0)}),
        row(v4(1, 0, 0, 0),
            {cv(v4(0, 0, 0, 1)), cvh(v4(0, 0, 1, 0), "c"), cv(v4(0, -1, 0, 0))},
            "S", 2, {"D1", "D2", "Q12"}, {}, {c_eq("x", 0)}),
        row(v4(0, 0, 1, 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))}, "SI",
            1, {"D1"}, {}, {c_ne("x", 0)}),
        row(v4(0, 0, 1, 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(0, 1, 0, 0)), cv(v4(1, 0, 0, 0))}, "SI",
            1, {"D1", "R"}, {"32.11(-)"}, {c_eq("x", 0)}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cvh(v4(0, 0, 1, 0), "c")},
            "I", 3, {"Q"}),
        row(v4(1, 0, 0, 1),
            {cvh(v4(0, 0, 1, 0), "c"), cv(v4(1, 0, 0, 0)),
             cv(v4(PX(), -1, 0, 0))},
            "I", 2, {"D1", "D2", "Q12"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              return SVec{v[0] + t * Scalar(p.at("x")) * v[2], v[1] - t * v[2],
                          v[2], v[3]};
            }),
        gen("A2", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              return SVec{v[0] + t * v[2], v[1] + t * Scalar(p.at("x")) * v[2],
                          v[2], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params& p) {
              Scalar f = s_exp(SC(-1) * t * Scalar(p.at("x")));
              return SVec{f * (s_cos(t) * v[0] - s_sin(t) * v[1]),
                          f * (s_sin(t) * v[0] + s_cos(t) * v[1]), v[2], v[3]};
            }),
        gen("O1", GenKind::Outer, shear(3, 2)),
        gen("S4", GenKind::ScaleOne, scale_slot(3)),
        lambda_gen(),
    };
    w.invariants = {
        {"I", [](const SVec& v, const Params&) { return v[2]; }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      return !v[2].is_zero() || !v[0].is_zero() ||
             (v[0].is_zero() && v[1].is_zero());
    };
    w.cases = {
        cse(
            "1", [](const QVec& v, const Params&) { return !v[2].is_zero(); },
            {step("A1",
                  [](const QVec& v, const Params& p) {
                    Rational x = p.at("x");
                    return Scalar((v[1] - x * v[0]) / ((1 + x * x) * v[2]));
                  }),
             step("A2",
                  [](const QVec& v, const Params& p) {
                    Rational x = p.at("x");
                    return SC(-1) *
                           Scalar((v[0] + x * v[1]) / ((1 + x * x) * v[2]));
                  }),
             step("O1", [](const QVec& v, const Params&) { return SC(-1) * Scalar(v[3] / v[2]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !v[3].is_zero() &&
                     !(sq(v[0]) + sq(v[1])).is_zero();
            },
            {step("A3",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                  }),
             step("S4",
                  [](const QVec& v, const Params& p) {
                    Scalar h = s_sqrt(Scalar(sq(v[0]) + sq(v[1])));
                    Scalar theta = s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                    return SC(sign_pm(v[0])) * Scalar(v[3]) / h *
                           s_exp(SC(-1) * theta * Scalar(p.at("x")));
                  }),
             step("lambda",
                  [](const QVec& v, const Params& p) {
                    Scalar h = s_sqrt(Scalar(sq(v[0]) + sq(v[1])));
                    Scalar theta = s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                    return h / SC(sign_pm(v[0])) *
                           s_exp(theta * Scalar(p.at("x")));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 1}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && !(sq(v[0]) + sq(v[1])).is_zero() &&
                     v[3].is_zero();
            },
            {step("A3",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                  }),
             step("lambda",
                  [](const QVec& v, const Params& p) {
                    Scalar h = s_sqrt(Scalar(sq(v[0]) + sq(v[1])));
                    Scalar theta = s_arctan_ratio(Scalar(v[1]), Scalar(v[0]));
                    return h / SC(sign_pm(v[0])) *
                           s_exp(theta * Scalar(p.at("x")));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              return v[2].is_zero() && v[0].is_zero() && v[1].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,-7)
  {
    auto& w = ws(cat, "L(4,-7)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cvh(v4(0, 0, 0, 1), "c1"), cvh(v4(0, 0, 1, 0), "c2"),
             cvh(v4(0, 1, 0, 0), "c3")},
            "", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 1, 0),
            {cvh(v4(1, 0, 0, 0), "c1"), cvh(v4(0, 0, 0, 1), "c2"),
             cvh(v4(0, 1, 0, 0), "c3")},
            "", 2, {"D1", "D2", "Q12"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "I",
            3, {"Q"}),
        row(v4(P(1, 2), 0, P(1, 2), 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(0, 1, 0, 0)),
             cv(v4(P(1, 2), 0, P(-1, 2), 0))},
            "S", 1, {"D1", "B"}, {"32.23(+)"}),
        row(v4(P(1, 2), 0, P(-1, 2), 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(0, 1, 0, 0)),
             cv(v4(P(-1, 2), 0, P(-1, 2), 0))},
            "S", 1, {"D1", "R"}, {"32.07"}),
        row(v4(1, 0, 0, 1),
            {cv(v4(0, 0, P(1, 2), 0)), cv(v4(0, -1, 0, 0)), cv(v4(1, 0, 0, 0))},
            "I", 1, {"D1", "N"}, {"32.08"}),
        row(v4(P(1, 2), 0, P(1, 2), P(1, 2)),
            {cv(v4(1, 0, 1, 0)), cv(v4(0, 2, 0, 0)), cv(v4(1, 0, -1, 0))}, "I",
            1, {"D1", "B"}, {"32.24(+)"}),
        row(v4(P(1, 2), 0, P(-1, 2), P(1, 2)),
            {cv(v4(1, 0, -1, 0)), cv(v4(0, -2, 0, 0)), cv(v4(1, 0, 1, 0))},
            "I", 1, {"D1", "R"}, {"32.24(-)"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] + t * v[1] - t * t * v[2],
                          v[1] - SC(2) * t * v[2], v[2], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], SC(2) * t * v[0] + v[1],
                          SC(-1) * t * t * v[0] - t * v[1] + v[2], v[3]};
            }),
        gen("S1^3", GenKind::ScalePair,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0] / t, v[1], t * v[2], v[3]};
            }),
        gen("S4", GenKind::ScaleOne, scale_slot(3)),
        lambda_gen(),
    };
    w.invariants = {
        {"I",
         [](const SVec& v, const Params&) {
           return SC(4) * v[0] * v[2] + v[1] * v[1];
         }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    // The printed pipelines land on e1 +- e3 (+ e4); the final projective
    // scaling is normalized by the extra factor 2 so the listed
    // representatives (the same lines) are exact fixed points.
    w.cases = {
        cse(
            "1",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return !I.is_zero() && !v[3].is_zero() && !v[2].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1] / (2 * v[2]));
                  }),
             step("S1^3",
                  [](const QVec& v, const Params&) {
                    Rational I = 4 * v[0] * v[2] + sq(v[1]);
                    return SC(1, 2) * s_sqrt(Scalar(rat_abs(I))) / Scalar(v[2]);
                  }),
             step("S4",
                  [](const QVec& v, const Params&) {
                    Rational I = 4 * v[0] * v[2] + sq(v[1]);
                    return SC(2) * Scalar(v[3]) * s_sqrt(Scalar(rat_abs(I))) /
                           Scalar(I);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational I = 4 * v[0] * v[2] + sq(v[1]);
                    return Scalar(I) / s_sqrt(Scalar(rat_abs(I)));
                  })},
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return QVec{RR(1, 2), 0, RR(sign_pm(I), 2), RR(1, 2)};
            }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return !I.is_zero() && !v[3].is_zero() && v[2].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] - v[0]) / v[1]);
                  }),
             step("A3", [](const QVec&, const Params&) { return SC(-1, 2); }),
             step("S1^3", [](const QVec&, const Params&) { return SC(2); }),
             step("S4",
                  [](const QVec& v, const Params&) {
                    return SC(2) * Scalar(v[3] / v[1]);
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) {
              return QVec{RR(1, 2), 0, RR(1, 2), RR(1, 2)};
            }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return !I.is_zero() && v[3].is_zero() && !v[2].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1] / (2 * v[2]));
                  }),
             step("S1^3",
                  [](const QVec& v, const Params&) {
                    Rational I = 4 * v[0] * v[2] + sq(v[1]);
                    return SC(1, 2) * s_sqrt(Scalar(rat_abs(I))) / Scalar(v[2]);
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational I = 4 * v[0] * v[2] + sq(v[1]);
                    return Scalar(I) / s_sqrt(Scalar(rat_abs(I)));
                  })},
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return QVec{RR(1, 2), 0, RR(sign_pm(I), 2), 0};
            }),
        cse(
            "4",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return !I.is_zero() && v[3].is_zero() && v[2].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] - v[0]) / v[1]);
                  }),
             step("A3", [](const QVec&, const Params&) { return SC(-1, 2); }),
             step("S1^3", [](const QVec&, const Params&) { return SC(2); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[1]); })},
            [](const QVec&, const Params&) {
              return QVec{RR(1, 2), 0, RR(1, 2), 0};
            }),
        cse(
            "5",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return I.is_zero() && !v[3].is_zero() && !v[2].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar((v[1] - 2 * v[2]) / (2 * v[2]));
                  }),
             step("A3", [](const QVec&, const Params&) { return SC(1); }),
             step("S1^3",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * Scalar(v[2] / v[3]);
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 1}; }),
        cse(
            "6",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return I.is_zero() && !v[3].is_zero() && v[2].is_zero() &&
                     !v[0].is_zero();
            },
            {step("S4", [](const QVec& v, const Params&) { return Scalar(v[3] / v[0]); }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 1}; }),
        cse(
            "7",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return I.is_zero() && !v[3].is_zero() && v[2].is_zero() &&
                     v[0].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
        cse(
            "8",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return I.is_zero() && v[3].is_zero() && !v[2].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return Scalar(v[1] / (2 * v[2]));
                  }),
             step("lambda", [](const QVec& v, const Params&) { return Scalar(v[2]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 1, 0}; }),
        cse(
            "9",
            [](const QVec& v, const Params&) {
              Rational I = 4 * v[0] * v[2] + sq(v[1]);
              return I.is_zero() && v[3].is_zero() && v[2].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[0]); })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
    };
  }

  // ---------------------------------------------------------------- L(4,-8)
  {
    auto& w = ws(cat, "L(4,-8)");
    w.rows = {
        row(v4(1, 0, 0, 0),
            {cv(v4(0, 0, 0, 1)), cv(v4(0, 0, 1, 0)), cv(v4(0, 1, 0, 0))}, "S",
            1, {"D1", "R"}, {"32.09"}),
        row(v4(0, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 1, 0, 0)), cv(v4(0, 0, 1, 0))}, "I",
            3, {"Q"}),
        row(v4(1, 0, 0, 1),
            {cv(v4(1, 0, 0, 0)), cv(v4(0, 0, 1, 0)), cv(v4(0, 1, 0, 0))}, "I",
            1, {"D1", "R"}, {"32.10"}),
    };
    w.gens = {
        gen("A1", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{v[0], s_cos(t) * v[1] - s_sin(t) * v[2],
                          s_sin(t) * v[1] + s_cos(t) * v[2], v[3]};
            }),
        gen("A3", GenKind::Inner,
            [](const Scalar& t, const SVec& v, const Params&) {
              return SVec{s_cos(t) * v[0] - s_sin(t) * v[1],
                          s_sin(t) * v[0] + s_cos(t) * v[1], v[2], v[3]};
            }),
        gen("S4", GenKind::ScaleOne, scale_slot(3)),
        lambda_gen(),
    };
    w.invariants = {
        {"I",
         [](const SVec& v, const Params&) {
           return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
         }},
        {"J", [](const SVec& v, const Params&) { return v[3]; }},
    };
    w.regular = [](const QVec& v, const Params&) {
      Rational I = sq(v[0]) + sq(v[1]) + sq(v[2]);
      return I.is_zero() || (!v[0].is_zero() && !v[1].is_zero());
    };
    w.cases = {
        cse(
            "1",
            [](const QVec& v, const Params&) {
              Rational I = sq(v[0]) + sq(v[1]) + sq(v[2]);
              return !I.is_zero() && !v[3].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("A3",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(sq(v[1]) + sq(v[2])));
                    return SC(-1) * s_arctan_ratio(
                                        rho, Scalar(v[0]) * SC(sign_pm(v[1])));
                  }),
             step("S4",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[0]) + sq(v[1]) + sq(v[2]);
                    return SC(sign_pm(v[0])) * Scalar(v[3]) /
                           s_sqrt(Scalar(I));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[0]) + sq(v[1]) + sq(v[2]);
                    return s_sqrt(Scalar(I)) / SC(sign_pm(v[0]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 1}; }),
        cse(
            "2",
            [](const QVec& v, const Params&) {
              Rational I = sq(v[0]) + sq(v[1]) + sq(v[2]);
              return !I.is_zero() && v[3].is_zero();
            },
            {step("A1",
                  [](const QVec& v, const Params&) {
                    return SC(-1) * s_arctan_ratio(Scalar(v[2]), Scalar(v[1]));
                  }),
             step("A3",
                  [](const QVec& v, const Params&) {
                    Scalar rho = s_sqrt(Scalar(sq(v[1]) + sq(v[2])));
                    return SC(-1) * s_arctan_ratio(
                                        rho, Scalar(v[0]) * SC(sign_pm(v[1])));
                  }),
             step("lambda",
                  [](const QVec& v, const Params&) {
                    Rational I = sq(v[0]) + sq(v[1]) + sq(v[2]);
                    return s_sqrt(Scalar(I)) / SC(sign_pm(v[0]));
                  })},
            [](const QVec&, const Params&) { return QVec{1, 0, 0, 0}; }),
        cse(
            "3",
            [](const QVec& v, const Params&) {
              Rational I = sq(v[0]) + sq(v[1]) + sq(v[2]);
              return I.is_zero() && !v[3].is_zero();
            },
            {step("lambda", [](const QVec& v, const Params&) { return Scalar(v[3]); })},
            [](const QVec&, const Params&) { return QVec{0, 0, 0, 1}; }),
    };
  }
}

}  // namespace catalog_detail
}  // namespace petrov
