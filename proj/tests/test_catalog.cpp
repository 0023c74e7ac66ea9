#include <doctest.h>

#include "core/catalog.hpp"

using namespace petrov;

TEST_CASE("catalog_get on direct keys") {
  const auto& cat = builtin_catalog();
  LieAlgebra g = cat.get("L(3,5)", {});
  CHECK(g.dim == 3);
  CHECK(g.bracket(unit_vec(3, 0), unit_vec(3, 1)) == QVec{1, 0, 0});
  CHECK(g.bracket(unit_vec(3, 0), unit_vec(3, 2)) == QVec{0, -2, 0});
  CHECK(g.bracket(unit_vec(3, 1), unit_vec(3, 2)) == QVec{0, 0, 1});

  LieAlgebra one = cat.get("L(1,1)", {});
  CHECK(one.dim == 1);
  CHECK(one.jacobi_check());
}

TEST_CASE("catalog_get validates constraints") {
  const auto& cat = builtin_catalog();
  CHECK_THROWS_AS(cat.get("L(3,2,x)", {{"x", 0}}), std::domain_error);
  CHECK_THROWS_AS(cat.get("L(3,2,x)", {{"x", 2}}), std::domain_error);
  CHECK_THROWS_AS(cat.get("L(9,9)", {}), std::invalid_argument);
  // The all-equal regime is a separate entry; the generic key rejects it.
  CHECK_THROWS_AS(cat.get("L(4,2,x,y)", {{"x", 1}, {"y", 1}}),
                  std::domain_error);
  CHECK(cat.get("L(4,2,1,1)", {}).dim == 4);
}

TEST_CASE("literal keys route to the right regime") {
  const auto& cat = builtin_catalog();
  auto [e1, p1] = cat.resolve("L(3,2,-1)", {});
  CHECK(e1->key == "L(3,2,x)");
  CHECK(p1.at("x") == -1);

  auto [e2, p2] = cat.resolve("L(3,2,1)", {});
  CHECK(e2->key == "L(3,2,1)");
  CHECK(p2.empty());

  auto [e3, p3] = cat.resolve("L(4,2,1/2,1/2)", {});
  CHECK(e3->key == "L(4,2,x,x)");
  CHECK(p3.at("x") == Rational(1, 2));

  auto [e4, p4] = cat.resolve("L(4,-4,-1)", {});
  CHECK(e4->key == "L(4,-4,x)");
  CHECK(p4.at("x") == -1);

  auto [e5, p5] = cat.resolve("L(3,4,x=0)", {});
  CHECK(e5->key == "L(3,4,0)");
}

TEST_CASE("every catalog sample is Jacobi valid") {
  const auto& cat = builtin_catalog();
  CHECK(cat.entries.size() >= 30);
  for (const auto& e : cat.entries) {
    REQUIRE(!e.samples.empty());
    for (const auto& s : e.samples) {
      CAPTURE(e.key);
      CHECK(conds_hold(e.constraints, s));
      CHECK(cat.instantiate(e, s).jacobi_check());
    }
  }
}

TEST_CASE("petrov id normalization") {
  CHECK(normalize_petrov_id("32.3") == "32.03");
  CHECK(normalize_petrov_id("32.24 (-)") == "32.24(-)");
  CHECK(normalize_petrov_id("30.4") == "30.4");
  CHECK(normalize_petrov_id("32.14(c=0)") == "32.14(c=0)");
  CHECK(normalize_petrov_id("M") == "M");
}

TEST_CASE("param expressions") {
  ParamExpr e = pp("x") + ParamExpr(1);
  CHECK(e.eval({{"x", Rational(1, 2)}}) == Rational(3, 2));
  CHECK_THROWS_AS(e.eval({}), std::invalid_argument);
  CHECK((Rational(2) * pp("x")).str() == "2*x");
}
