#include <doctest.h>

#include <cmath>

#include "core/expr.hpp"
#include "core/verify.hpp"

using namespace petrov;

TEST_CASE("evaluation of a composite expression") {
  // cos(x3) * x2 - (coth(x2) * sin(x3) - 1) / x1
  Expr e = e_cos(ex(2)) * ex(1) - (e_coth(ex(1)) * e_sin(ex(2)) - ec(1)) / ex(0);
  std::vector<double> p = {0.5, 0.7, 0.3};
  double want = std::cos(0.3) * 0.7 -
                ((std::cosh(0.7) / std::sinh(0.7)) * std::sin(0.3) - 1.0) / 0.5;
  CHECK(e.eval(p) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("evaluation guards against poles") {
  Expr e = ec(1) / ex(0);
  CHECK_THROWS_AS(e.eval({0.0}), std::domain_error);
}

TEST_CASE("symbolic derivatives agree with central differences") {
  std::vector<Expr> exprs = {
      e_sin(ex(0)) * e_cos(ex(1)),
      e_tan(ex(0)) + e_cot(ex(1)),
      e_sinh(ex(0)) * e_tanh(ex(1)) - e_coth(ex(0)),
      e_exp(ex(0) * ex(1)) / (ec(1) + pow_i(ex(0), 2)),
      pow_i(ex(1), 3) - ex(0) * ex(1) + ec(5, 2),
      e_cosh(ex(0)) / e_sinh(ex(0)),
  };
  RatSampler rng(13);
  for (const auto& e : exprs) {
    for (int k = 0; k < 2; ++k) {
      Expr d = e.diff(k);
      for (int t = 0; t < 100; ++t) {
        std::vector<double> p = {
            0.3 + 0.5 * static_cast<double>(rng.next_raw() % 1000) / 1000.0,
            0.3 + 0.5 * static_cast<double>(rng.next_raw() % 1000) / 1000.0};
        const double h = 1e-6;
        std::vector<double> pm = p, pp = p;
        pm[k] -= h;
        pp[k] += h;
        double fd = (e.eval(pp) - e.eval(pm)) / (2 * h);
        double sym = d.eval(p);
        double scale = std::max(1.0, std::abs(sym));
        CHECK(std::abs(fd - sym) / scale < 1e-6);
      }
    }
  }
}

TEST_CASE("derivatives stay inside the grammar") {
  Expr e = e_coth(pow_i(ex(0), 2)) / e_tan(ex(1));
  Expr d2 = e.diff(0).diff(1).diff(0);
  CHECK(std::isfinite(d2.eval({0.4, 0.6})));
}

TEST_CASE("printing is stable") {
  Expr e = ec(1, 2) * ex(0) + e_exp(ex(2));
  CHECK(e.str() == "((1/2*x1)+exp(x3))");
}
