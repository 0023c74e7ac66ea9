#ifndef PETROV_EXPR_HPP
#define PETROV_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "rational.hpp"

namespace petrov {

// Expression tree over coordinates x1..xn, rational constants, arithmetic,
// integer powers and the unary functions needed by the generator tables.
// Closed under partial differentiation.
class Expr {
 public:
  enum class Kind {
    Const,
    Coord,
    Add,
    Sub,
    Mul,
    Div,
    Pow,  // integer exponent >= 2
    Sin,
    Cos,
    Tan,
    Cot,
    Sinh,
    Cosh,
    Tanh,
    Coth,
    Exp,
  };

  Expr();

  static Expr constant(const Rational& c);
  static Expr coord(int k);  // zero-based coordinate index

  double eval(const std::vector<double>& point) const;
  Expr diff(int k) const;  // partial derivative w.r.t. coordinate k
  std::string str() const;

  Kind kind() const;
  bool is_zero_const() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow_i(const Expr& a, int n);
  friend Expr apply_fn(Kind k, const Expr& a);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr bin(Kind k, const Expr& a, const Expr& b);
  std::shared_ptr<const Node> node_;
};

Expr pow_i(const Expr& a, int n);
Expr apply_fn(Expr::Kind k, const Expr& a);
Expr e_sin(const Expr& a);
Expr e_cos(const Expr& a);
Expr e_tan(const Expr& a);
Expr e_cot(const Expr& a);
Expr e_sinh(const Expr& a);
Expr e_cosh(const Expr& a);
Expr e_tanh(const Expr& a);
Expr e_coth(const Expr& a);
Expr e_exp(const Expr& a);

inline Expr ec(long n, long d = 1) { return Expr::constant(Rational(n, d)); }
inline Expr ex(int k) { return Expr::coord(k); }

}  // namespace petrov

#endif
