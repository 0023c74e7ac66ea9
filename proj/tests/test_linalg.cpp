#include <doctest.h>

#include "core/qmatrix.hpp"
#include "core/verify.hpp"

using namespace petrov;

namespace {

QMat m22(long a, long b, long c, long d) {
  QMat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  auto [r1, p1] = rref(m22(2, 4, 1, 2));
  CHECK(r1 == m22(1, 2, 0, 0));
  CHECK(p1 == std::vector<int>{0});

  auto [r2, p2] = rref(QMat::identity(3));
  CHECK(r2 == QMat::identity(3));
  CHECK(p2 == std::vector<int>{0, 1, 2});

  auto [r3, p3] = rref(m22(0, 1, 0, 0));
  CHECK(r3 == m22(0, 1, 0, 0));
  CHECK(p3 == std::vector<int>{1});
}

TEST_CASE("nullspace basics") {
  auto n1 = nullspace(m22(0, 1, 0, 0));
  REQUIRE(n1.size() == 1);
  CHECK(n1[0] == QVec{1, 0});

  CHECK(nullspace(QMat::identity(2)).empty());

  QMat m(3, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  auto n2 = nullspace(m);
  REQUIRE(n2.size() == 2);
  for (const auto& v : n2) {
    auto img = mat_vec(m, v);
    for (const auto& x : img) CHECK(x == 0);
    CHECK(v[0] + v[1] == 0);
  }
  CHECK(rank(m) == 1);
}

TEST_CASE("nullspace vectors are exactly annihilated on random matrices") {
  RatSampler rng(11);
  for (int t = 0; t < 60; ++t) {
    int rows = 1 + static_cast<int>(rng.next_raw() % 4);
    int cols = 1 + static_cast<int>(rng.next_raw() % 4);
    QMat m(rows, cols);
    for (auto& x : m.a) x = rng.next();
    auto ns = nullspace(m);
    CHECK(static_cast<int>(ns.size()) + rank(m) == cols);
    for (const auto& v : ns)
      for (const auto& x : mat_vec(m, v)) CHECK(x == 0);
  }
}

TEST_CASE("char_poly matches the stated cases") {
  QMat d(3, 3);
  d.at(0, 0) = 1;
  d.at(1, 1) = -1;
  CHECK(char_poly(d) == QVec{1, 0, -1, 0});

  CHECK(char_poly(m22(0, -1, 1, 0)) == QVec{1, 0, 1});

  QMat z(3, 3);
  CHECK(char_poly(z) == QVec{1, 0, 0, 0});

  CHECK_THROWS_AS(char_poly(QMat(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly is similarity invariant") {
  RatSampler rng(23);
  for (int t = 0; t < 40; ++t) {
    QMat m(3, 3), p(3, 3);
    for (auto& x : m.a) x = rng.next();
    do {
      for (auto& x : p.a) x = rng.next();
    } while (det(p) == 0);
    QMat conj = inverse(p) * m * p;
    CHECK(char_poly(conj) == char_poly(m));
  }
}

TEST_CASE("signature by coefficient sign changes") {
  CHECK(signature(SymForm::diag({1, -1})) == Signature{1, 1, 0});

  SymForm n(3);
  n.q.at(0, 2) = 1;
  n.q.at(2, 0) = 1;
  n.q.at(1, 1) = 1;
  // Eigenvalues {1, 1, -1}: the characteristic polynomial factors as
  // (l-1)^2 (l+1).
  CHECK(signature(n) == Signature{2, 1, 0});

  CHECK(signature(SymForm(3)) == Signature{0, 0, 3});
  CHECK(signature(SymForm::diag({1, 1, 1})) == Signature{3, 0, 0});
  CHECK(signature(SymForm::diag({1, 1, -1})) == Signature{2, 1, 0});
}

TEST_CASE("signature is congruence invariant") {
  RatSampler rng(37);
  for (int t = 0; t < 40; ++t) {
    QMat q(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        q.at(i, j) = rng.next();
        q.at(j, i) = q.at(i, j);
      }
    QMat s(3, 3);
    do {
      for (auto& x : s.a) x = rng.next();
    } while (det(s) == 0);
    SymForm f = SymForm::from_matrix(q);
    SymForm g = SymForm::from_matrix(s.transpose() * q * s);
    CHECK(signature(f) == signature(g));
  }
}

TEST_CASE("subspace equality via canonical row spaces") {
  CHECK(subspace_equal({{1, 0}}, {{2, 0}}));
  CHECK(!subspace_equal({{1, 0}}, {{0, 1}}));
  // span{diag(1,1,-1), diag(0,1,-1)} equals span{diag(1,0,0), diag(0,1,-1)}
  // in symmetric coordinates.
  QVec d1b = sym_coords(SymForm::diag({1, 1, -1}));
  QVec b = sym_coords(SymForm::diag({0, 1, -1}));
  QVec d1 = sym_coords(SymForm::diag({1, 0, 0}));
  CHECK(subspace_equal({d1b, b}, {d1, b}));
  CHECK_THROWS_AS(subspace_equal({{1, 0}}, {{1, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("solve returns a particular solution when consistent") {
  QMat a = m22(1, 2, 2, 4);
  auto x = solve(a, QVec{3, 6});
  REQUIRE(x.has_value());
  auto img = mat_vec(a, *x);
  CHECK(img == QVec{3, 6});
  CHECK(!solve(a, QVec{3, 7}).has_value());
}
