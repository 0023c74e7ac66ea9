#ifndef PETROV_RATIONAL_HPP
#define PETROV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace petrov {

using Int =
    boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

// Exact rational scalar. Always in lowest terms with positive denominator
// (the rational adaptor maintains both invariants). Expression templates are
// off so arithmetic yields plain values.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline int rat_signum(const Rational& q) { return q.sign(); }

// Sign convention used throughout the canonicalization pipelines: sign(0) = +1.
inline int sign_pm(const Rational& q) { return q < 0 ? -1 : 1; }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::string rat_to_string(const Rational& q);
Rational rat_from_string(const std::string& s);

// Exact square root when the argument is a perfect square of a rational.
std::optional<Rational> rat_sqrt_exact(const Rational& q);

inline std::string rat_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

inline Rational rat_from_string(const std::string& s) {
  auto bad = [&]() -> Rational {
    throw std::invalid_argument("not a rational: '" + s + "'");
  };
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) return bad();
  auto slash = t.find('/');
  auto parse_int = [&](const std::string& u) -> Int {
    if (u.empty() || u == "-" || u == "+") bad();
    for (size_t i = 0; i < u.size(); ++i) {
      char c = u[i];
      if (i == 0 && (c == '-' || c == '+')) continue;
      if (!isdigit(static_cast<unsigned char>(c))) bad();
    }
    return Int(u);
  };
  if (slash == std::string::npos) return Rational(parse_int(t));
  Int num = parse_int(t.substr(0, slash));
  Int den = parse_int(t.substr(slash + 1));
  if (den == 0) bad();
  return Rational(num, den);
}

inline std::optional<Rational> rat_sqrt_exact(const Rational& q) {
  if (q < 0) return std::nullopt;
  Int rn, rd, rem;
  rn = sqrt(numerator(q), rem);
  if (rem != 0) return std::nullopt;
  rd = sqrt(denominator(q), rem);
  if (rem != 0) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace petrov

#endif
