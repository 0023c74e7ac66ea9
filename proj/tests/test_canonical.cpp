#include <doctest.h>

#include <cmath>

#include "core/canonical.hpp"
#include "core/verify.hpp"

using namespace petrov;

namespace {
const Catalog& cat() { return builtin_catalog(); }

const AutoGen& find_gen(const std::string& key, const std::string& name) {
  const Worksheet* w = cat().find_worksheet(key);
  REQUIRE(w != nullptr);
  for (const auto& g : w->gens)
    if (g.name == name) return g;
  REQUIRE(false);
  return w->gens.front();
}
}  // namespace

TEST_CASE("apply_generator reproduces the printed formulas") {
  // A1(1) on e2 follows (y1 + t y2 - t^2 y3, y2 - 2 t y3, y3).
  SVec out = apply_generator(find_gen("L(3,5)", "A1"), Scalar(1),
                             to_svec(QVec{0, 1, 0}), {});
  CHECK(svec_eq(out, to_svec(QVec{1, 1, 0})));

  // Inner and outer generators are the identity at t = 0.
  SVec id1 = apply_generator(find_gen("L(3,5)", "A3"), Scalar(0),
                             to_svec(QVec{3, -2, 5}), {});
  CHECK(svec_eq(id1, to_svec(QVec{3, -2, 5})));
  SVec id2 = apply_generator(find_gen("L(3,1)", "O1"), Scalar(0),
                             to_svec(QVec{3, -2, 5}), {});
  CHECK(svec_eq(id2, to_svec(QVec{3, -2, 5})));

  // lambda(2)(2 e1) = e1.
  SVec l = apply_generator(find_gen("L(3,5)", "lambda"), Scalar(2),
                           to_svec(QVec{2, 0, 0}), {});
  CHECK(svec_eq(l, to_svec(QVec{1, 0, 0})));

  CHECK_THROWS_AS(apply_generator(find_gen("L(3,5)", "S1^3"), Scalar(0),
                                  to_svec(QVec{1, 0, 0}), {}),
                  std::domain_error);
}

TEST_CASE("check_automorphism distinguishes generators from the scaling") {
  CHECK(check_automorphism(cat().get("L(3,5)", {}),
                           find_gen("L(3,5)", "S1^3"), Scalar(Rational(3, 2))));
  CHECK(!check_automorphism(cat().get("L(3,5)", {}),
                            find_gen("L(3,5)", "lambda"), Scalar(2)));
  // Transcendental parameter: verified within tolerance.
  CHECK(check_automorphism(cat().get("L(3,6)", {}), find_gen("L(3,6)", "A1"),
                           Scalar::approx(std::atan(1.0))));
}

TEST_CASE("adjoint invariants evaluate the printed polynomials") {
  auto m = adjoint_invariants(cat(), "L(3,5)", {}, QVec{1, 0, 1});
  CHECK(m.at("I").exact_value() == 4);
  auto n = adjoint_invariants(cat(), "L(3,1)", {}, QVec{5, 2, -3});
  CHECK(n.at("I").exact_value() == 2);
  CHECK(n.at("J").exact_value() == -3);
}

TEST_CASE("canonicalize lands on the printed representatives") {
  // I = 4 > 0, y3 != 0: the first pipeline in the L(3,5) analysis.
  auto r1 = canonicalize(cat(), "L(3,5)", {}, QVec{1, 0, 1});
  CHECK(r1.case_id == "1");
  CHECK(r1.representative == QVec{Rational(1, 2), 0, Rational(1, 2)});
  CHECK(r1.exact);
  CHECK(svec_eq(r1.transformed, to_svec(r1.representative)));

  // y3 = 0, I = (y2)^2 != 0.
  auto r2 = canonicalize(cat(), "L(3,5)", {}, QVec{0, 1, 0});
  CHECK(r2.case_id == "2");
  CHECK(r2.representative == QVec{Rational(1, 2), 0, Rational(1, 2)});
  CHECK(svec_eq(r2.transformed, to_svec(r2.representative)));

  // Negative invariant lands on the rotation representative.
  auto r3 = canonicalize(cat(), "L(3,5)", {}, QVec{1, 0, -1});
  CHECK(r3.representative == QVec{Rational(1, 2), 0, Rational(-1, 2)});
  CHECK(svec_eq(r3.transformed, to_svec(r3.representative)));

  CHECK_THROWS_AS(canonicalize(cat(), "L(3,5)", {}, QVec{0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("canonicalize records a transcript") {
  auto r = canonicalize(cat(), "L(3,2,x)", {{"x", Rational(-1, 2)}},
                        QVec{3, 4, 2});
  CHECK(r.case_id == "1");
  REQUIRE(r.transcript.size() == 3);
  CHECK(r.transcript[0].gen == "A1");
  CHECK(r.transcript.back().gen == "lambda");
  CHECK(r.transcript.back().param.exact_value() == 2);
  for (const auto& s : r.transcript) CHECK(s.exact);
}

TEST_CASE("enumerate_subalgebras follows the worksheet") {
  auto rows = enumerate_subalgebras(cat(), "L(3,6)", {});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].representative == QVec{1, 0, 0});
  CHECK(iso_letter(rows[0].report.iso) == "R");
  CHECK(rows[0].report.ctype.symmetric);

  auto rows5 = enumerate_subalgebras(cat(), "L(3,5)", {});
  REQUIRE(rows5.size() == 3);
  CHECK(rows5[1].representative == QVec{Rational(1, 2), 0, Rational(1, 2)});
}

TEST_CASE("property suites pass on a reduced budget") {
  VerifyOptions o;
  o.vectors = 120;
  o.trials = 40;
  CHECK(all_pass(verify_jacobi(cat(), o)));
  for (const auto& r : verify_automorphisms(cat(), o)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
  for (const auto& r : verify_adjoint_invariants(cat(), o)) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
  for (const auto& r : verify_canonicalization(cat(), o)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}
