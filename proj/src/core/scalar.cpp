#include "scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace petrov {

double& approx_tolerance() {
  static double tol = 1e-9;
  return tol;
}

const Rational& Scalar::exact_value() const {
  if (!exact_) throw std::logic_error("scalar is approximate");
  return r_;
}

Scalar Scalar::operator-() const {
  if (exact_) return Scalar(Rational(-r_));
  return approx(-d_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (exact_ && o.exact_) {
    r_ += o.r_;
  } else {
    *this = approx(to_double() + o.to_double());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (exact_ && o.exact_) {
    r_ -= o.r_;
  } else {
    *this = approx(to_double() - o.to_double());
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (exact_ && o.exact_) {
    r_ *= o.r_;
  } else {
    *this = approx(to_double() * o.to_double());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (exact_ && o.exact_) {
    r_ /= o.r_;
  } else {
    *this = approx(to_double() / o.to_double());
  }
  return *this;
}

std::string Scalar::str() const {
  if (exact_) return rat_to_string(r_);
  std::ostringstream os;
  os.precision(17);
  os << d_;
  return os.str();
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

bool scalar_eq(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact_value() == b.exact_value();
  return std::abs(a.to_double() - b.to_double()) <= approx_tolerance();
}

int sign_pm(const Scalar& s) {
  if (s.is_exact()) return sign_pm(s.exact_value());
  return s.to_double() < 0 ? -1 : 1;
}

Scalar scalar_abs(const Scalar& s) {
  if (s.is_exact()) return Scalar(rat_abs(s.exact_value()));
  return Scalar::approx(std::abs(s.to_double()));
}

Scalar s_sqrt(const Scalar& s) {
  if (s.is_exact()) {
    if (auto r = rat_sqrt_exact(s.exact_value())) return Scalar(*r);
  }
  double d = s.to_double();
  if (d < 0) throw std::domain_error("sqrt of negative value");
  return Scalar::approx(std::sqrt(d));
}

Scalar s_exp(const Scalar& s) {
  if (s.is_exact() && s.is_zero()) return Scalar(1);
  return Scalar::approx(std::exp(s.to_double()));
}

Scalar s_cos(const Scalar& s) {
  if (s.is_exact() && s.is_zero()) return Scalar(1);
  return Scalar::approx(std::cos(s.to_double()));
}

Scalar s_sin(const Scalar& s) {
  if (s.is_exact() && s.is_zero()) return Scalar(0);
  return Scalar::approx(std::sin(s.to_double()));
}

Scalar s_arctan(const Scalar& s) {
  if (s.is_exact() && s.is_zero()) return Scalar(0);
  return Scalar::approx(std::atan(s.to_double()));
}

Scalar s_arctan_ratio(const Scalar& num, const Scalar& den) {
  if (den.is_zero()) {
    if (num.is_zero()) return Scalar(0);
    double half_pi = std::acos(0.0);
    return Scalar::approx(num.to_double() > 0 ? half_pi : -half_pi);
  }
  return s_arctan(num / den);
}

SVec to_svec(const QVec& v) {
  SVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(q);
  return out;
}

bool svec_eq(const SVec& a, const SVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!scalar_eq(a[i], b[i])) return false;
  return true;
}

}  // namespace petrov
