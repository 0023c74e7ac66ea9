#ifndef PETROV_SCALAR_HPP
#define PETROV_SCALAR_HPP

#include <cmath>
#include <string>
#include <vector>

#include "rational.hpp"

namespace petrov {

// Absolute tolerance for equality tests between approximate values.
double& approx_tolerance();

// Tagged scalar: exact rational or approximate double. Mixed arithmetic
// promotes to approximate; exact arithmetic never rounds.
class Scalar {
 public:
  Scalar() : exact_(true), r_(0) {}
  Scalar(const Rational& r) : exact_(true), r_(r) {}
  Scalar(long n) : exact_(true), r_(n) {}
  static Scalar approx(double d) {
    Scalar s;
    s.exact_ = false;
    s.d_ = d;
    return s;
  }

  bool is_exact() const { return exact_; }
  const Rational& exact_value() const;
  double to_double() const {
    return exact_ ? static_cast<double>(r_) : d_;
  }

  bool is_zero() const { return exact_ ? r_.is_zero() : d_ == 0.0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  std::string str() const;

 private:
  bool exact_;
  Rational r_;
  double d_ = 0.0;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);

// Equality: exact when both operands are exact, within approx_tolerance()
// otherwise.
bool scalar_eq(const Scalar& a, const Scalar& b);

int sign_pm(const Scalar& s);  // sign(0) = +1
Scalar scalar_abs(const Scalar& s);

// Transcendental wrappers. Arguments that make the result an exact rational
// (t = 0 throughout) stay exact; everything else drops to approximate.
Scalar s_sqrt(const Scalar& s);
Scalar s_exp(const Scalar& s);
Scalar s_cos(const Scalar& s);
Scalar s_sin(const Scalar& s);
Scalar s_arctan(const Scalar& s);

// arctan(num/den) with a zero denominator read as +0 (matching the
// sign(0) = +1 convention): +-pi/2 by the sign of num.
Scalar s_arctan_ratio(const Scalar& num, const Scalar& den);

using SVec = std::vector<Scalar>;
using QVec = std::vector<Rational>;

SVec to_svec(const QVec& v);
bool svec_eq(const SVec& a, const SVec& b);

}  // namespace petrov

#endif
