#include "catalog.hpp"

// Structure-constant catalog for the real Lie algebras of dimensions 1-4,
// split by worksheet regime. Entry keys name the regime; constraints combine
// the catalog's parameter ranges with the regime conditions.

namespace petrov {
namespace catalog_detail {

namespace {

ParamExpr P0() { return ParamExpr(0); }
ParamExpr P1() { return ParamExpr(1); }

PEVec pzero(int dim) { return PEVec(static_cast<size_t>(dim), P0()); }

PEVec pe3(ParamExpr a, ParamExpr b, ParamExpr c) { return {a, b, c}; }
PEVec pe4(ParamExpr a, ParamExpr b, ParamExpr c, ParamExpr d) {
  return {a, b, c, d};
}

CatalogEntry& add(Catalog& cat, const std::string& key, int dim,
                  std::vector<std::string> params, std::vector<Cond> constraints) {
  CatalogEntry e;
  e.key = key;
  e.dim = dim;
  e.param_names = std::move(params);
  e.constraints = std::move(constraints);
  cat.entries.push_back(std::move(e));
  return cat.entries.back();
}

void br(CatalogEntry& e, int i, int j, PEVec coeffs) {
  e.brackets.push_back({i - 1, j - 1, std::move(coeffs)});
}

}  // namespace

void build_algebras(Catalog& cat) {
  // --- dimensions 1 and 2
  add(cat, "L(1,1)", 1, {}, {}).samples = {{}};
  {
    auto& e = add(cat, "L(2,1)", 2, {}, {});
    br(e, 1, 2, {P1(), P0()});
    e.samples = {{}};
  }

  // --- dimension 3
  {
    auto& e = add(cat, "L(3,1)", 3, {}, {});
    br(e, 2, 3, pe3(P1(), P0(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(3,2,x)", 3, {"x"},
                  {c_ne("x", 0), c_abs_le("x", 1), c_ne("x", 1)});
    br(e, 1, 3, pe3(P1(), P0(), P0()));
    br(e, 2, 3, pe3(P0(), pp("x"), P0()));
    e.samples = {{{"x", -1}}, {{"x", Rational(-1, 2)}}, {{"x", Rational(1, 2)}}};
  }
  {
    auto& e = add(cat, "L(3,2,1)", 3, {}, {});
    br(e, 1, 3, pe3(P1(), P0(), P0()));
    br(e, 2, 3, pe3(P0(), P1(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(3,3)", 3, {}, {});
    br(e, 1, 3, pe3(P1(), P0(), P0()));
    br(e, 2, 3, pe3(P1(), P1(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(3,4,x)", 3, {"x"}, {c_gt("x", 0)});
    br(e, 1, 3, pe3(pp("x"), Rational(-1) * P1(), P0()));
    br(e, 2, 3, pe3(P1(), pp("x"), P0()));
    e.samples = {{{"x", 1}}, {{"x", 2}}, {{"x", Rational(1, 2)}}};
  }
  {
    auto& e = add(cat, "L(3,4,0)", 3, {}, {});
    br(e, 1, 3, pe3(P0(), ParamExpr(-1), P0()));
    br(e, 2, 3, pe3(P1(), P0(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(3,5)", 3, {}, {});
    br(e, 1, 2, pe3(P1(), P0(), P0()));
    br(e, 1, 3, pe3(P0(), ParamExpr(-2), P0()));
    br(e, 2, 3, pe3(P0(), P0(), P1()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(3,6)", 3, {}, {});
    br(e, 1, 2, pe3(P0(), P0(), P1()));
    br(e, 1, 3, pe3(P0(), ParamExpr(-1), P0()));
    br(e, 2, 3, pe3(P1(), P0(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(3,-1)", 3, {}, {});
    br(e, 1, 2, pe3(P1(), P0(), P0()));
    e.samples = {{}};
  }

  // --- dimension 4, indecomposable
  {
    auto& e = add(cat, "L(4,1)", 4, {}, {});
    br(e, 2, 4, pe4(P1(), P0(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P1(), P0(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,2,x,y)", 4, {"x", "y"},
                  {c_ge("y", -1), c_le_pp("y", "x"), c_le("x", 1), c_ne("x", 0),
                   c_ne("y", 0), c_ne("x", -1), c_ne_pp("x", "y"), c_ne("x", 1)});
    br(e, 1, 4, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), pp("x"), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), pp("y"), P0()));
    e.samples = {{{"x", Rational(1, 2)}, {"y", Rational(-1, 2)}},
                 {{"x", Rational(3, 4)}, {"y", Rational(1, 4)}},
                 {{"x", Rational(1, 2)}, {"y", -1}}};
  }
  {
    auto& e = add(cat, "L(4,2,x,x)", 4, {"x"},
                  {c_ge("x", -1), c_le("x", 1), c_ne("x", 0), c_ne("x", -1),
                   c_ne("x", 1)});
    br(e, 1, 4, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), pp("x"), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), pp("x"), P0()));
    e.samples = {{{"x", Rational(1, 2)}}, {{"x", Rational(-1, 2)}},
                 {{"x", Rational(3, 4)}}};
  }
  {
    auto& e = add(cat, "L(4,2,1,y)", 4, {"y"},
                  {c_ge("y", -1), c_le("y", 1), c_ne("y", 0), c_ne("y", 1)});
    br(e, 1, 4, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), P1(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), pp("y"), P0()));
    e.samples = {{{"y", -1}}, {{"y", Rational(1, 2)}}, {{"y", Rational(-1, 2)}}};
  }
  {
    auto& e = add(cat, "L(4,2,1,1)", 4, {}, {});
    br(e, 1, 4, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), P1(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), P1(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,3)", 4, {}, {});
    br(e, 2, 4, pe4(P1(), P0(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), P1(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,4,x)", 4, {"x"}, {c_ne("x", 0), c_ne("x", 1)});
    br(e, 1, 4, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P1(), P1(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), pp("x"), P0()));
    e.samples = {{{"x", -1}}, {{"x", Rational(1, 2)}}, {{"x", 2}}};
  }
  {
    auto& e = add(cat, "L(4,4,1)", 4, {}, {});
    br(e, 1, 4, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P1(), P1(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), P1(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,5,x,y)", 4, {"x", "y"}, {c_gt("x", 0)});
    br(e, 1, 4, pe4(pp("x"), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), pp("y"), ParamExpr(-1), P0()));
    br(e, 3, 4, pe4(P0(), P1(), pp("y"), P0()));
    e.samples = {{{"x", 1}, {"y", 2}},
                 {{"x", 2}, {"y", 1}},
                 {{"x", Rational(1, 2)}, {"y", -1}}};
  }
  {
    auto& e = add(cat, "L(4,6)", 4, {}, {});
    br(e, 1, 4, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P1(), P1(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P1(), P1(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,7)", 4, {}, {});
    br(e, 1, 4, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), P1(), P0(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,8)", 4, {}, {});
    br(e, 2, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), P1(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), ParamExpr(-1), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,9,x)", 4, {"x"},
                  {c_gt("x", -1), c_le("x", 1), c_ne("x", 0), c_ne("x", 1)});
    br(e, 1, 4, pe4(pp("x") + P1(), P0(), P0(), P0()));
    br(e, 2, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), P1(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), pp("x"), P0()));
    // x = -1/2 sits on the measure-zero set where the e4 row gains an
    // invariant form (Q13); keep samples generic.
    e.samples = {{{"x", Rational(1, 2)}}, {{"x", Rational(-1, 3)}},
                 {{"x", Rational(3, 4)}}};
  }
  {
    auto& e = add(cat, "L(4,9,1)", 4, {}, {});
    br(e, 1, 4, pe4(ParamExpr(2), P0(), P0(), P0()));
    br(e, 2, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), P1(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), P1(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,10)", 4, {}, {});
    br(e, 1, 4, pe4(ParamExpr(2), P0(), P0(), P0()));
    br(e, 2, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), P1(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P1(), P1(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,11)", 4, {}, {});
    br(e, 2, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), P0(), ParamExpr(-1), P0()));
    br(e, 3, 4, pe4(P0(), P1(), P0(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,12,x)", 4, {"x"}, {c_gt("x", 0)});
    br(e, 1, 4, pe4(Rational(2) * pp("x"), P0(), P0(), P0()));
    br(e, 2, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 4, pe4(P0(), pp("x"), ParamExpr(-1), P0()));
    br(e, 3, 4, pe4(P0(), P1(), pp("x"), P0()));
    e.samples = {{{"x", 1}}, {{"x", 2}}, {{"x", Rational(1, 2)}}};
  }
  {
    auto& e = add(cat, "L(4,13)", 4, {}, {});
    br(e, 1, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 1, 4, pe4(P0(), ParamExpr(-1), P0(), P0()));
    br(e, 2, 3, pe4(P0(), P1(), P0(), P0()));
    br(e, 2, 4, pe4(P1(), P0(), P0(), P0()));
    e.samples = {{}};
  }

  // --- dimension 4, decomposable
  {
    auto& e = add(cat, "L(4,-1)", 4, {}, {});
    br(e, 1, 2, pe4(P1(), P0(), P0(), P0()));
    e.decomposition_key = "L(3,-1)";
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,-2)", 4, {}, {});
    br(e, 1, 2, pe4(P1(), P0(), P0(), P0()));
    br(e, 3, 4, pe4(P0(), P0(), P1(), P0()));
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,-3)", 4, {}, {});
    br(e, 2, 3, pe4(P1(), P0(), P0(), P0()));
    e.decomposition_key = "L(3,1)";
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,-4,x)", 4, {"x"},
                  {c_ne("x", 0), c_abs_le("x", 1), c_ne("x", 1)});
    br(e, 1, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 3, pe4(P0(), pp("x"), P0(), P0()));
    e.decomposition_key = "L(3,2,x)";
    e.samples = {{{"x", -1}}, {{"x", Rational(1, 2)}}, {{"x", Rational(-1, 2)}}};
  }
  {
    auto& e = add(cat, "L(4,-4,1)", 4, {}, {});
    br(e, 1, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 3, pe4(P0(), P1(), P0(), P0()));
    e.decomposition_key = "L(3,2,1)";
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,-5)", 4, {}, {});
    br(e, 1, 3, pe4(P1(), P0(), P0(), P0()));
    br(e, 2, 3, pe4(P1(), P1(), P0(), P0()));
    e.decomposition_key = "L(3,3)";
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,-6,x)", 4, {"x"}, {c_ge("x", 0)});
    br(e, 1, 3, pe4(pp("x"), ParamExpr(-1), P0(), P0()));
    br(e, 2, 3, pe4(P1(), pp("x"), P0(), P0()));
    e.decomposition_key = "L(3,4,x)";
    e.samples = {{{"x", 0}}, {{"x", 1}}, {{"x", Rational(1, 2)}}};
  }
  {
    auto& e = add(cat, "L(4,-7)", 4, {}, {});
    br(e, 1, 2, pe4(P1(), P0(), P0(), P0()));
    br(e, 1, 3, pe4(P0(), ParamExpr(-2), P0(), P0()));
    br(e, 2, 3, pe4(P0(), P0(), P1(), P0()));
    e.decomposition_key = "L(3,5)";
    e.samples = {{}};
  }
  {
    auto& e = add(cat, "L(4,-8)", 4, {}, {});
    br(e, 1, 2, pe4(P0(), P0(), P1(), P0()));
    br(e, 1, 3, pe4(P0(), ParamExpr(-1), P0(), P0()));
    br(e, 2, 3, pe4(P1(), P0(), P0(), P0()));
    e.decomposition_key = "L(3,6)";
    e.samples = {{}};
  }

  (void)pzero;
}

}  // namespace catalog_detail
}  // namespace petrov
