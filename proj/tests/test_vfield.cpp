#include <doctest.h>

#include <cmath>

#include "core/verify.hpp"
#include "core/vfield.hpp"

using namespace petrov;

namespace {
const Catalog& cat() { return builtin_catalog(); }

const PetrovAction& action(const std::string& id) {
  const PetrovAction* a = cat().action(id);
  REQUIRE(a != nullptr);
  return *a;
}
}  // namespace

TEST_CASE("vf_eval substitutes the point componentwise") {
  const auto& a = action("32.12");
  // X4 = -x3 p1 + x2 p3 at (1,2,3,0).
  auto v = vf_eval(a.corrected.fields[3], {1, 2, 3, 0});
  CHECK(v == std::vector<double>{-3, 0, 2, 0});

  auto c = vf_eval(a.corrected.fields[0], {0.3, 0.4, 0.5, 0.6});
  CHECK(c == std::vector<double>{0, 1, 0, 0});

  const auto& b = action("30.6");
  auto z = vf_eval(b.corrected.fields[2], {0, 0, 0});
  CHECK(z[0] == doctest::Approx(0.0));
  CHECK(z[1] == doctest::Approx(0.0));
}

TEST_CASE("vf_bracket_at computes the commutator") {
  const auto& a = action("32.12");
  for (const Point& p : std::initializer_list<Point>{
           {0.3, 0.4, 0.5, 0.6}, {0.7, 0.2, 0.8, 0.4}}) {
    auto br = vf_bracket_at(a.corrected.fields[0], a.corrected.fields[3], p);
    auto x2 = vf_eval(a.corrected.fields[1], p);
    for (int k = 0; k < 4; ++k) CHECK(br[k] == doctest::Approx(x2[k]));
    auto self = vf_bracket_at(a.corrected.fields[1], a.corrected.fields[1], p);
    for (double s : self) CHECK(s == doctest::Approx(0.0));
  }
  const auto& b = action("30.1");
  auto br = vf_bracket_at(b.corrected.fields[0], b.corrected.fields[2],
                          {1, 1, 0});
  auto x2 = vf_eval(b.corrected.fields[1], {1, 1, 0});
  for (int k = 0; k < 3; ++k) CHECK(br[k] == doctest::Approx(x2[k]));
}

TEST_CASE("bracket antisymmetry holds pointwise") {
  for (const char* id : {"32.07", "32.10", "30.4"}) {
    const auto& a = action(id);
    auto pts = sample_box(a, 3, 6);
    const auto& f = a.corrected.fields;
    for (const auto& p : pts) {
      for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = i + 1; j < f.size(); ++j) {
          auto xy = vf_bracket_at(f[i], f[j], p);
          auto yx = vf_bracket_at(f[j], f[i], p);
          for (size_t k = 0; k < xy.size(); ++k)
            CHECK(std::abs(xy[k] + yx[k]) < 1e-8);
        }
    }
  }
}

TEST_CASE("verify_action on corrected realizations") {
  for (const char* id :
       {"30.1", "30.2", "30.4", "30.5", "30.6", "30.8", "32.03", "32.04",
        "32.05", "32.06", "32.07", "32.08", "32.09", "32.10", "32.11(+)",
        "32.11(-)", "32.12", "32.14(c!=0,1)", "32.14(c=1)", "32.14(c=0)",
        "32.15", "32.16(q!=0)", "32.16(q=0)", "32.23(+)", "32.24(+)",
        "32.24(-)", "32.26"}) {
    auto rep = verify_action(cat(), id, "corrected", 0);
    CAPTURE(id);
    CHECK(rep.closure_residual <= 1e-9);
    CHECK(rep.identification_residual <= 1e-9);
    CHECK(rep.isotropy_residual <= 1e-9);
    CHECK(rep.preferred_isotropy_ok);
  }
}

TEST_CASE("equivalent ids resolve to their representative") {
  bool used = false;
  std::string resolved;
  const PetrovAction* a = cat().action("32.19", &used, &resolved);
  REQUIRE(a != nullptr);
  CHECK(used);
  CHECK(resolved == "32.03");
  CHECK(a->id == "32.03");
  // Unpadded print routes through normalization.
  CHECK(cat().action("32.3") == cat().action("32.03"));
}

TEST_CASE("typo variants fail as recorded") {
  for (const char* id : {"30.6", "32.07", "32.24(+)", "32.24(-)"}) {
    auto rep = verify_action(cat(), id, "typo", 0);
    CAPTURE(id);
    CHECK(rep.closure_residual > 1e-3);
  }
  // The 30.8 print closes on a different algebra instead.
  auto rep = verify_action(cat(), "30.8", "typo", 0);
  CHECK(rep.closure_residual <= 1e-9);
  CHECK(rep.identification_residual <= 1e-9);
  CHECK(rep.identified_class == "L(3,1)");
  auto corrected = verify_action(cat(), "30.8", "corrected", 0);
  CHECK(corrected.identified_class != rep.identified_class);

  CHECK_THROWS_AS(verify_action(cat(), "32.12", "typo", 0),
                  std::invalid_argument);
}

TEST_CASE("recovered constants are point independent") {
  for (const char* id : {"32.07", "32.23(+)", "30.4"}) {
    auto r1 = verify_action(cat(), id, "corrected", 11, 20);
    auto r2 = verify_action(cat(), id, "corrected", 77, 20);
    REQUIRE(r1.recovered.size() == r2.recovered.size());
    for (size_t i = 0; i < r1.recovered.size(); ++i)
      for (size_t j = 0; j < r1.recovered.size(); ++j)
        for (size_t k = 0; k < r1.recovered.size(); ++k)
          CHECK(std::abs(r1.recovered[i][j][k] - r2.recovered[i][j][k]) <
                1e-8);
  }
}

TEST_CASE("verify_actions suite is green") {
  VerifyOptions o;
  for (const auto& r : verify_actions(cat(), o)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}
