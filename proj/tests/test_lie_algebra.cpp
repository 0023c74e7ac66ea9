#include <doctest.h>

#include "core/catalog.hpp"
#include "core/classify.hpp"
#include "core/verify.hpp"

using namespace petrov;

TEST_CASE("bracket follows the structure table") {
  LieAlgebra g = builtin_catalog().get("L(3,5)", {});
  // [e1, e3] = -2 e2
  CHECK(g.bracket(unit_vec(3, 0), unit_vec(3, 2)) == QVec{0, -2, 0});
  RatSampler rng(5);
  for (int t = 0; t < 20; ++t) {
    QVec v = rng.next_vec(3);
    for (const auto& x : g.bracket(v, v)) CHECK(x == 0);
  }
  CHECK_THROWS_AS(g.bracket(QVec{1, 2}, QVec{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("bracket antisymmetry and Jacobi on random vectors") {
  const auto& cat = builtin_catalog();
  RatSampler rng(7);
  for (const char* key : {"L(3,5)", "L(4,8)", "L(4,13)", "L(4,-7)"}) {
    LieAlgebra g = cat.get(key, {});
    for (int t = 0; t < 25; ++t) {
      QVec u = rng.next_vec(g.dim), v = rng.next_vec(g.dim),
           w = rng.next_vec(g.dim);
      QVec uv = g.bracket(u, v), vu = g.bracket(v, u);
      for (int i = 0; i < g.dim; ++i) CHECK(uv[i] + vu[i] == 0);
      QVec s1 = g.bracket(g.bracket(u, v), w);
      QVec s2 = g.bracket(g.bracket(v, w), u);
      QVec s3 = g.bracket(g.bracket(w, u), v);
      for (int i = 0; i < g.dim; ++i) CHECK(s1[i] + s2[i] + s3[i] == 0);
    }
  }
}

TEST_CASE("jacobi_check flags corrupted constants") {
  const auto& cat = builtin_catalog();
  CHECK(cat.get("L(3,6)", {}).jacobi_check());
  CHECK(cat.get("L(4,12,x)", {{"x", Rational(1, 2)}}).jacobi_check());

  // One-sided alteration of [e1,e3] breaks antisymmetry of the table.
  LieAlgebra bad = cat.get("L(3,5)", {});
  bad.c[0][2] = QVec{0, -1, 0};
  CHECK(!bad.jacobi_check());

  // Two-sided alteration of [e2,e3] to e1 breaks the cyclic sum:
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = -2e2.
  LieAlgebra bad2 = cat.get("L(3,5)", {});
  bad2.set_bracket(1, 2, QVec{1, 0, 0});
  CHECK(!bad2.jacobi_check());
}

TEST_CASE("ad matrices") {
  const auto& cat = builtin_catalog();
  LieAlgebra a = cat.get("L(4,-3)", {});
  CHECK(a.ad_matrix(unit_vec(4, 3)).is_zero());  // e4 central

  LieAlgebra b = cat.get("L(3,2,x)", {{"x", -1}});
  QMat m = b.ad_matrix(unit_vec(3, 2));
  // ad(e3): e1 -> -e1, e2 -> e2.
  CHECK(m.at(0, 0) == -1);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(2, 2) == 0);

  CHECK(b.ad_matrix(QVec{0, 0, 0}).is_zero());
}

TEST_CASE("ad is a representation") {
  const auto& cat = builtin_catalog();
  RatSampler rng(9);
  for (const char* key : {"L(3,5)", "L(4,10)", "L(4,-7)"}) {
    LieAlgebra g = cat.get(key, {});
    for (int t = 0; t < 20; ++t) {
      QVec u = rng.next_vec(g.dim), v = rng.next_vec(g.dim);
      QMat lhs = g.ad_matrix(g.bracket(u, v));
      QMat au = g.ad_matrix(u), av = g.ad_matrix(v);
      QMat rhs = au * av + [&] {
        QMat neg = av * au;
        for (auto& x : neg.a) x = -x;
        return neg;
      }();
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("quotient_action on the stated pairs") {
  const auto& cat = builtin_catalog();
  {
    LieAlgebra g = cat.get("L(4,8)", {});
    Complement m{{QVec{1, 0, 0, 0}, QVec{0, 1, 1, 0}, QVec{0, -1, 1, 0}}};
    QMat M = quotient_action(g, SubalgebraLine{unit_vec(4, 3)}, m);
    QMat want(3, 3);
    want.at(1, 2) = 1;
    want.at(2, 1) = 1;
    CHECK(M == want);
  }
  {
    LieAlgebra g = cat.get("L(4,11)", {});
    Complement m{{QVec{1, 0, 0, 0}, QVec{0, 1, 0, 0}, QVec{0, 0, -1, 0}}};
    QMat M = quotient_action(g, SubalgebraLine{unit_vec(4, 3)}, m);
    QVec cp = char_poly(M);
    CHECK(cp == QVec{1, 0, 1, 0});  // eigenvalues {0, +i, -i}
  }
  {
    LieAlgebra g = cat.get("L(4,-3)", {});
    Complement m{{unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)}};
    CHECK(quotient_action(g, SubalgebraLine{unit_vec(4, 3)}, m).is_zero());
  }
}

TEST_CASE("quotient_action rejects non-reductive complements in strict mode") {
  const auto& cat = builtin_catalog();
  LieAlgebra g = cat.get("L(3,2,x)", {{"x", Rational(1, 2)}});
  // [e1, e3] = e1 lands on h for h0 = e1, complement (e2, e3).
  Complement m{{unit_vec(3, 1), unit_vec(3, 2)}};
  CHECK_THROWS_AS(
      quotient_action(g, SubalgebraLine{unit_vec(3, 0)}, m, QuotientMode::Strict),
      std::domain_error);
  QMat q = quotient_action(g, SubalgebraLine{unit_vec(3, 0)}, m,
                           QuotientMode::Quotient);
  CHECK(q.rows == 2);
}

TEST_CASE("quotient_action spectrum is complement independent") {
  const auto& cat = builtin_catalog();
  LieAlgebra g = cat.get("L(4,-7)", {});
  SubalgebraLine h{QVec{Rational(1, 2), 0, Rational(1, 2), 0}};
  Complement m1{{QVec{0, 0, 0, 1}, QVec{0, 1, 0, 0},
                 QVec{Rational(1, 2), 0, Rational(-1, 2), 0}}};
  Complement m2{{QVec{0, 0, 0, 1}, QVec{0, 2, 0, 0},
                 QVec{Rational(1, 2), 1, Rational(-1, 2), 0}}};
  CHECK(char_poly(quotient_action(g, h, m1)) ==
        char_poly(quotient_action(g, h, m2)));
}

TEST_CASE("bracket_contained on the stated pairs") {
  const auto& cat = builtin_catalog();
  {
    LieAlgebra g = cat.get("L(3,2,x)", {{"x", -1}});
    std::vector<QVec> m = {unit_vec(3, 0), unit_vec(3, 1)};
    std::vector<QVec> h = {unit_vec(3, 2)};
    CHECK(bracket_contained(g, m, m, h));
  }
  {
    LieAlgebra g = cat.get("L(4,-7)", {});
    std::vector<QVec> m = {unit_vec(4, 3), unit_vec(4, 1),
                           QVec{Rational(-1, 2), 0, Rational(-1, 2), 0}};
    CHECK(!bracket_contained(g, basis_vectors(4), m, m));
  }
  {
    LieAlgebra g = cat.get("L(4,8)", {});
    std::vector<QVec> a = {unit_vec(4, 0), unit_vec(4, 1)};
    CHECK(bracket_contained(g, a, a, basis_vectors(4)));
  }
}
