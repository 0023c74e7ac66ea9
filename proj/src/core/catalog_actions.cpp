#include "catalog_build.hpp"

// Generator vector fields of the local group actions, with the recorded
// corrections applied, plus the uncorrected variants where the corrections
// table lists one. Coordinates are zero-based: x1 = ex(0), ..., x4 = ex(3).
// The identification data (class, change of basis), the generic isotropy
// coefficients, the preferred point and its isotropy, and a sampling box
// clear of the coordinate singularities accompany each action.

namespace petrov {
namespace catalog_detail {

namespace {

Expr zero() { return ec(0); }

VField vf3(Expr a, Expr b, Expr c) { return {a, b, c}; }
VField vf4(Expr a, Expr b, Expr c, Expr d) { return {a, b, c, d}; }

PetrovAction& act(Catalog& cat, const std::string& id, int ambient) {
  cat.actions.push_back(PetrovAction{});
  PetrovAction& a = cat.actions.back();
  a.id = id;
  a.ambient = ambient;
  for (int k = 0; k < 4; ++k) a.box[k] = {0.2, 0.8};
  return a;
}

void ident(ActionVariant& v, const std::string& cls, Params exact,
           std::vector<std::vector<double>> basis) {
  v.winternitz_key = cls;
  v.winternitz_params_exact = std::move(exact);
  v.change_of_basis = std::move(basis);
}

}  // namespace

void build_actions(Catalog& cat) {
  const double pi = 3.14159265358979323846;

  // ------------------------------------------------------------------ 30.1
  {
    auto& a = act(cat, "30.1", 3);
    a.corrected.fields = {vf3(ec(1), zero(), zero()), vf3(zero(), ec(1), zero()),
                          vf3(-ex(1), ex(0), zero())};
    ident(a.corrected, "L(3,4,0)", {},
          {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
    a.generic_isotropy = {ex(1), -ex(0), ec(1)};
    a.x0 = {0, 0, 0};
    a.preferred_h0 = {0, 0, 1};
  }

  // ------------------------------------------------------------------ 30.2
  {
    auto& a = act(cat, "30.2", 3);
    a.corrected.fields = {vf3(ec(1), zero(), zero()), vf3(zero(), ec(1), zero()),
                          vf3(ex(0), -ex(1), zero())};
    ident(a.corrected, "L(3,2,x)", {{"x", -1}},
          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    a.generic_isotropy = {-ex(0), ex(1), ec(1)};
    a.x0 = {0, 0, 0};
    a.preferred_h0 = {0, 0, 1};
  }

  // ------------------------------------------------------------------ 30.4
  {
    auto& a = act(cat, "30.4", 3);
    a.corrected.fields = {
        vf3(e_cosh(ex(1)), e_sinh(ex(1)) * e_tan(ex(0)), zero()),
        vf3(zero(), ec(1), zero()),
        vf3(e_sinh(ex(1)), e_cosh(ex(1)) * e_tan(ex(0)), zero())};
    ident(a.corrected, "L(3,5)", {},
          {{1, 0, -1}, {0, 1, 0}, {-1, 0, -1}});
    a.generic_isotropy = {-e_sinh(ex(1)), -e_tan(ex(0)), e_cosh(ex(1))};
    a.x0 = {0, 0, 0};
    a.preferred_h0 = {0, 0, 1};
  }

  // ------------------------------------------------------------------ 30.5
  {
    auto& a = act(cat, "30.5", 3);
    a.corrected.fields = {
        vf3(e_cos(ex(1)), -(e_sin(ex(1)) * e_tanh(ex(0))), zero()),
        vf3(zero(), ec(1), zero()),
        vf3(e_sin(ex(1)), e_cos(ex(1)) * e_tanh(ex(0)), zero())};
    ident(a.corrected, "L(3,5)", {},
          {{0, 1, -1}, {1, 0, 0}, {0, -1, -1}});
    a.generic_isotropy = {-e_sin(ex(1)), -e_tanh(ex(0)), e_cos(ex(1))};
    a.x0 = {0, 0, 0};
    a.preferred_h0 = {0, 0, 1};
  }

  // ------------------------------------------------------------------ 30.6
  {
    auto& a = act(cat, "30.6", 3);
    a.corrected.fields = {
        vf3(e_cos(ex(1)), e_sin(ex(1)) * e_tan(ex(0)), zero()),
        vf3(zero(), ec(1), zero()),
        vf3(e_sin(ex(1)), -(e_cos(ex(1)) * e_tan(ex(0))), zero())};
    ident(a.corrected, "L(3,6)", {},
          {{0, 0, -1}, {0, 1, 0}, {1, 0, 0}});
    a.generic_isotropy = {-e_sin(ex(1)), e_tan(ex(0)), e_cos(ex(1))};
    a.x0 = {0, 0, 0};
    a.preferred_h0 = {0, 0, 1};
    // Uncorrected print: the second term of X3 lands on p1 instead of p2.
    ActionVariant typo = a.corrected;
    typo.fields[2] =
        vf3(e_sin(ex(1)) - e_cos(ex(1)) * e_tan(ex(0)), zero(), zero());
    a.typo = typo;
  }

  // ------------------------------------------------------------------ 30.8
  {
    auto& a = act(cat, "30.8", 4);  // the uncorrected print reaches x4
    a.corrected.fields = {vf4(ec(1), zero(), zero(), zero()),
                          vf4(zero(), ec(1), zero(), zero()),
                          vf4(ex(1), ex(0), zero(), zero())};
    ident(a.corrected, "L(3,2,x)", {{"x", -1}},
          {{1, 1, 0}, {1, -1, 0}, {0, 0, 1}});
    a.generic_isotropy = {-ex(1), -ex(0), ec(1)};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0, 0, 1};
    // Uncorrected print: X3 = x2 p1 + x4 p2; these fields close on L(3,1).
    ActionVariant typo = a.corrected;
    typo.fields[2] = vf4(ex(1), ex(3), zero(), zero());
    ident(typo, "L(3,1)", {}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    a.typo = typo;
  }

  // ----------------------------------------------------------------- 32.03
  {
    auto& a = act(cat, "32.03", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(ec(-1), ex(2), zero(), zero()),
        vf4(-ex(0), zero(), ex(2), zero())};
    ident(a.corrected, "L(4,8)", {},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {ex(0) * ex(2), -ex(2), -ex(0), ec(1)};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0, 0, 0, 1};
  }

  // ----------------------------------------------------------------- 32.04
  {
    auto& a = act(cat, "32.04", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(ec(-1), ex(2), zero(), zero()),
        vf4(-ex(2), ec(1, 2) * (pow_i(ex(2), 2) - pow_i(ex(0), 2)), ex(0),
            zero())};
    ident(a.corrected, "L(4,11)", {},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
    a.generic_isotropy = {ec(1, 2) * (pow_i(ex(0), 2) + pow_i(ex(2), 2)),
                          -ex(0), -ex(2), ec(1)};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0, 0, 0, 1};
  }

  // ----------------------------------------------------------------- 32.05
  {
    auto& a = act(cat, "32.05", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(ec(-1), ex(1), zero(), zero()), vf4(ec(-1), zero(), ex(2), zero())};
    ident(a.corrected, "L(4,-2)", {},
          {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {ex(1), -ex(2), ec(-1), ec(1)};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0, 0, -1, 1};
  }

  // ----------------------------------------------------------------- 32.06
  {
    auto& a = act(cat, "32.06", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(ec(-1), ex(1), ex(2), zero()), vf4(zero(), -ex(2), ex(1), zero())};
    ident(a.corrected, "L(4,13)", {},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
    a.generic_isotropy = {ex(2), -ex(1), zero(), ec(1)};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0, 0, 0, 1};
  }

  // ----------------------------------------------------------------- 32.07
  {
    auto& a = act(cat, "32.07", 4);
    Expr sh = e_sinh(ex(1));
    Expr ch = e_cosh(ex(1));
    a.corrected.fields = {
        vf4(zero(), e_cos(ex(2)), (-(ch * e_sin(ex(2))) + sh) / sh, zero()),
        vf4(zero(), e_sin(ex(2)), ch * e_cos(ex(2)) / sh, zero()),
        vf4(zero(), e_cos(ex(2)), -((ch * e_sin(ex(2)) + sh) / sh), zero()),
        vf4(ec(1), zero(), zero(), zero())};
    ident(a.corrected, "L(4,-7)", {},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {
        ec(1, 2) * (e_sin(ex(2)) * e_tanh(ex(1)) + ec(1)),
        -(e_cos(ex(2)) * e_tanh(ex(1))),
        ec(1, 2) * (e_sin(ex(2)) * e_tanh(ex(1)) - ec(1)), zero()};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0.5, 0, -0.5, 0};
    // Uncorrected print: the second component of X1 carries + instead of -.
    ActionVariant typo = a.corrected;
    typo.fields[0] =
        vf4(zero(), e_cos(ex(2)), (e_coth(ex(1)) * e_sin(ex(2)) - ec(1)), zero());
    a.typo = typo;
  }

  // ----------------------------------------------------------------- 32.08
  {
    auto& a = act(cat, "32.08", 4);
    Expr em = e_exp(-ex(2));
    a.corrected.fields = {
        vf4(em, -(em * pow_i(ex(1), 2)), ec(-2) * ex(1) * em, zero()),
        vf4(zero(), zero(), ec(1), zero()),
        vf4(zero(), e_exp(ex(2)), zero(), zero()),
        vf4(ec(1), zero(), zero(), zero())};
    ident(a.corrected, "L(4,-7)", {},
          {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {ec(1), ec(2) * ex(1) * em,
                          pow_i(ex(1), 2) * e_exp(ec(-2) * ex(2)), -em};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {1, 0, 0, -1};
  }

  // ----------------------------------------------------------------- 32.09
  {
    auto& a = act(cat, "32.09", 4);
    Expr s2 = e_sin(ex(1));
    Expr c2 = e_cos(ex(1));
    a.corrected.fields = {
        vf4(zero(), zero(), ec(1), zero()),
        vf4(zero(), e_sin(ex(2)), c2 * e_cos(ex(2)) / s2, zero()),
        vf4(zero(), e_cos(ex(2)), -(c2 * e_sin(ex(2)) / s2), zero()),
        vf4(ec(1), zero(), zero(), zero())};
    ident(a.corrected, "L(4,-8)", {},
          {{0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {-e_cot(ex(1)), e_cos(ex(2)), -e_sin(ex(2)), zero()};
    a.x0 = {0, pi / 2, pi / 2, 0};
    a.preferred_h0 = {0, 0, -1, 0};
    a.box[1] = {1.2, 1.8};
  }

  // ----------------------------------------------------------------- 32.10
  {
    auto& a = act(cat, "32.10", 4);
    Expr s1 = e_sin(ex(0));
    Expr c1 = e_cos(ex(0));
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()),
        vf4(e_cos(ex(1)), -(c1 * e_sin(ex(1)) / s1), e_sin(ex(1)) / s1,
            zero()),
        vf4(-e_sin(ex(1)), -(c1 * e_cos(ex(1)) / s1), e_cos(ex(1)) / s1,
            zero()),
        vf4(e_sin(ex(2)), -(e_cos(ex(2)) / s1), c1 * e_cos(ex(2)) / s1,
            zero())};
    ident(a.corrected, "L(4,-8)", {},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {
        e_cos(ex(2)) * s1,
        -(e_sin(ex(1)) * c1 * e_cos(ex(2)) + e_sin(ex(2)) * e_cos(ex(1))),
        e_sin(ex(1)) * e_sin(ex(2)) - c1 * e_cos(ex(2)) * e_cos(ex(1)),
        ec(1)};
    a.x0 = {pi / 2, 0, 0, 0};
    a.preferred_h0 = {1, 0, 0, 1};
    a.box[0] = {1.2, 1.8};
  }

  // -------------------------------------------------------------- 32.11(+)
  {
    auto& a = act(cat, "32.11(+)", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(ec(-1), zero(), zero(), zero()), vf4(zero(), ex(2), ex(1), zero())};
    ident(a.corrected, "L(4,-4,x)", {{"x", -1}},
          {{1, 1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    a.generic_isotropy = {-ex(2), -ex(1), zero(), ec(1)};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0, 0, 0, 1};
  }

  // -------------------------------------------------------------- 32.11(-)
  {
    auto& a = act(cat, "32.11(-)", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(ec(-1), zero(), zero(), zero()),
        vf4(zero(), -ex(2), ex(1), zero())};
    ident(a.corrected, "L(4,-6,x)", {{"x", 0}},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
    a.generic_isotropy = {ex(2), -ex(1), zero(), ec(1)};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0, 0, 0, 1};
  }

  // ----------------------------------------------------------------- 32.12
  {
    auto& a = act(cat, "32.12", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(ec(-1), zero(), zero(), zero()),
        vf4(-ex(2), zero(), ex(1), zero())};
    ident(a.corrected, "L(4,1)", {},
          {{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {zero(), -ex(1), -ex(2), ec(1)};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0, 0, 0, 1};
  }

  // ------------------------------------------------- 32.14 family (c = 1/2)
  {
    auto& a = act(cat, "32.14(c!=0,1)", 4);
    Rational c(1, 2);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(zero(), ex(2), -ex(0), zero()),
        vf4(Expr::constant(Rational(2) - c) * ex(0), Expr::constant(c) * ex(1),
            ex(2), zero())};
    ident(a.corrected, "L(4,9,x)", {{"x", c - 1}},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {-ex(2), ex(0), ec(1), zero()};
    a.x0 = {1, 0, 0, 0};
    a.preferred_h0 = {0, 1, 1, 0};
  }

  // ------------------------------------------------------------ 32.14(c=1)
  {
    auto& a = act(cat, "32.14(c=1)", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(zero(), ex(2), -ex(0), zero()),
        vf4(ex(0), ex(1), ex(2), zero())};
    ident(a.corrected, "L(4,7)", {},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {-ex(2), ex(0), ec(1), zero()};
    a.x0 = {1, 0, 0, 0};
    a.preferred_h0 = {0, 1, 1, 0};
  }

  // ------------------------------------------------------------ 32.14(c=0)
  {
    auto& a = act(cat, "32.14(c=0)", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(zero(), ex(2), -ex(0), zero()),
        vf4(ec(2) * ex(0), zero(), ex(2), zero())};
    ident(a.corrected, "L(4,8)", {},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {-ex(2), ex(0), ec(1), zero()};
    a.x0 = {1, 0, 0, 0};
    a.preferred_h0 = {0, 1, 1, 0};
  }

  // ----------------------------------------------------------------- 32.15
  {
    auto& a = act(cat, "32.15", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(zero(), ex(2), -ex(0), zero()),
        vf4(ec(1), ec(2) * ex(1), ex(2), zero())};
    ident(a.corrected, "L(4,10)", {},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {-ex(2), ex(0), ec(1), zero()};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0, 0, 1, 0};
  }

  // ---------------------------------------------------- 32.16 family (q = 1)
  {
    auto& a = act(cat, "32.16(q!=0)", 4);
    Rational q(1);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(zero(), ex(2), -ex(0), zero()),
        vf4(-(pow_i(ex(0), 2) + Expr::constant(q) * ex(0) + ec(1)),
            Expr::constant(q) * ex(1) + ec(1, 2) * pow_i(ex(2), 2),
            -(ex(0) * ex(2)), zero())};
    // x = sqrt(q^2 / (4 - q^2)) for q = 1.
    const double xq = 0.57735026918962576;
    a.corrected.winternitz_key = "L(4,12,x)";
    a.corrected.winternitz_params_approx["x"] = xq;
    const double s = 1.5 * xq;  // (4 - q^2) / (2q) * x = sqrt(4 - q^2) / 2
    // The bracket relations force e3 = +s X2 given e2 = -(q/2) X2 + X3; the
    // printed table carries the opposite sign on e3.
    a.corrected.change_of_basis = {{-s, 0, 0, 0},
                                   {0, -0.5, 1, 0},
                                   {0, s, 0, 0},
                                   {0, 0, 0, 2 * xq}};
    a.generic_isotropy = {-ex(2), ex(0), ec(1), zero()};
    a.x0 = {-0.5, 0, 0, 0};
    a.preferred_h0 = {0, -0.5, 1, 0};
  }

  // ------------------------------------------------------------ 32.16(q=0)
  {
    auto& a = act(cat, "32.16(q=0)", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()), vf4(zero(), zero(), ec(1), zero()),
        vf4(zero(), ex(2), -ex(0), zero()),
        vf4(-(pow_i(ex(0), 2) + ec(1)), ec(1, 2) * pow_i(ex(2), 2),
            -(ex(0) * ex(2)), zero())};
    ident(a.corrected, "L(4,11)", {},
          {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, -1}});
    a.generic_isotropy = {-ex(2), ex(0), ec(1), zero()};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0, 0, 1, 0};
  }

  // -------------------------------------------------------------- 32.23(+)
  {
    auto& a = act(cat, "32.23(+)", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()),
        vf4(zero(), ex(1), ec(1), zero()),
        vf4(zero(), pow_i(ex(1), 2) + e_exp(ec(2) * ex(2)), ec(2) * ex(1),
            zero()),
        vf4(ec(1), zero(), zero(), zero())};
    ident(a.corrected, "L(4,-7)", {},
          {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {pow_i(ex(1), 2) - e_exp(ec(2) * ex(2)),
                          ec(-2) * ex(1), ec(1), zero()};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0.5, 0, -0.5, 0};
  }

  // -------------------------------------------------------------- 32.24(+)
  {
    auto& a = act(cat, "32.24(+)", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()),
        vf4(zero(), ex(1), ec(1), zero()),
        vf4(-e_exp(ex(2)), pow_i(ex(1), 2) + e_exp(ec(2) * ex(2)),
            ec(2) * ex(1), zero()),
        vf4(ec(1), zero(), zero(), zero())};
    ident(a.corrected, "L(4,-7)", {},
          {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {pow_i(ex(1), 2) - e_exp(ec(2) * ex(2)),
                          ec(-2) * ex(1), ec(1), e_exp(ex(2))};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0.5, 0, -0.5, -0.5};
    // Uncorrected print: exp(x2) in the p1 term and 2 x3 in the p3 term.
    ActionVariant typo = a.corrected;
    typo.fields[2] =
        vf4(-e_exp(ex(1)), pow_i(ex(1), 2) + e_exp(ec(2) * ex(2)),
            ec(2) * ex(2), zero());
    a.typo = typo;
  }

  // -------------------------------------------------------------- 32.24(-)
  {
    auto& a = act(cat, "32.24(-)", 4);
    a.corrected.fields = {
        vf4(zero(), ec(1), zero(), zero()),
        vf4(zero(), ex(1), ec(1), zero()),
        vf4(-e_exp(ex(2)), pow_i(ex(1), 2) - e_exp(ec(2) * ex(2)),
            ec(2) * ex(1), zero()),
        vf4(ec(1), zero(), zero(), zero())};
    ident(a.corrected, "L(4,-7)", {},
          {{0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}});
    a.generic_isotropy = {pow_i(ex(1), 2) + e_exp(ec(2) * ex(2)),
                          ec(-2) * ex(1), ec(1), e_exp(ex(2))};
    a.x0 = {0, 0, 0, 0};
    a.preferred_h0 = {0.5, 0, 0.5, 0.5};
    ActionVariant typo = a.corrected;
    typo.fields[2] =
        vf4(-e_exp(ex(1)), pow_i(ex(1), 2) - e_exp(ec(2) * ex(2)),
            ec(2) * ex(2), zero());
    a.typo = typo;
  }

  // ----------------------------------------------------------------- 32.26
  {
    auto& a = act(cat, "32.26", 4);
    // The free coefficient functions are instantiated as w(x4) = x4 and
    // l(x4) = x4^2; closure is independent of the choice.
    a.corrected.fields = {
        vf4(ec(1), zero(), zero(), zero()), vf4(zero(), ec(1), zero(), zero()),
        vf4(zero(), zero(), ec(1), zero()),
        vf4(ex(1), ex(3), pow_i(ex(3), 2), zero())};
    ident(a.corrected, "L(4,-3)", {},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    a.generic_isotropy = {-ex(1), -ex(3), -pow_i(ex(3), 2), ec(1)};
    a.has_preferred = false;
  }
}

}  // namespace catalog_detail
}  // namespace petrov
