#include "expr.hpp"

#include <cmath>
#include <stdexcept>

namespace petrov {

struct Expr::Node {
  Kind kind;
  Rational cval;
  int coord = 0;
  int ipow = 0;
  std::shared_ptr<const Node> a, b;
};

using Kind = Expr::Kind;

namespace {
bool node_is_const(const Expr::Node* n, long v) {
  return n->kind == Kind::Const && n->cval == v;
}
}  // namespace

Expr::Expr() : Expr(constant(0)) {}

Expr Expr::constant(const Rational& c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->cval = c;
  return Expr(std::move(n));
}

Expr Expr::coord(int k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Coord;
  n->coord = k;
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }

bool Expr::is_zero_const() const { return node_is_const(node_.get(), 0); }

Expr Expr::bin(Kind k, const Expr& a, const Expr& b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = a.node_;
  n->b = b.node_;
  return Expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero_const()) return b;
  if (b.is_zero_const()) return a;
  return Expr::bin(Kind::Add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
  if (b.is_zero_const()) return a;
  return Expr::bin(Kind::Sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero_const() || b.is_zero_const()) return Expr::constant(0);
  if (node_is_const(a.node_.get(), 1)) return b;
  if (node_is_const(b.node_.get(), 1)) return a;
  return Expr::bin(Kind::Mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (a.is_zero_const()) return Expr::constant(0);
  if (node_is_const(b.node_.get(), 1)) return a;
  return Expr::bin(Kind::Div, a, b);
}

Expr operator-(const Expr& a) { return Expr::constant(-1) * a; }

Expr pow_i(const Expr& a, int n) {
  if (n == 0) return Expr::constant(1);
  if (n == 1) return a;
  if (n < 0) throw std::invalid_argument("negative exponent; use division");
  auto node = std::make_shared<Expr::Node>();
  node->kind = Kind::Pow;
  node->ipow = n;
  node->a = a.node_;
  return Expr(std::move(node));
}

Expr apply_fn(Kind k, const Expr& a) {
  auto node = std::make_shared<Expr::Node>();
  node->kind = k;
  node->a = a.node_;
  return Expr(std::move(node));
}

Expr e_sin(const Expr& a) { return apply_fn(Kind::Sin, a); }
Expr e_cos(const Expr& a) { return apply_fn(Kind::Cos, a); }
Expr e_tan(const Expr& a) { return apply_fn(Kind::Tan, a); }
Expr e_cot(const Expr& a) { return apply_fn(Kind::Cot, a); }
Expr e_sinh(const Expr& a) { return apply_fn(Kind::Sinh, a); }
Expr e_cosh(const Expr& a) { return apply_fn(Kind::Cosh, a); }
Expr e_tanh(const Expr& a) { return apply_fn(Kind::Tanh, a); }
Expr e_coth(const Expr& a) { return apply_fn(Kind::Coth, a); }
Expr e_exp(const Expr& a) { return apply_fn(Kind::Exp, a); }

namespace {

double eval_node(const Expr::Node* n, const std::vector<double>& p) {
  switch (n->kind) {
    case Kind::Const:
      return static_cast<double>(n->cval);
    case Kind::Coord:
      if (n->coord >= static_cast<int>(p.size()))
        throw std::out_of_range("coordinate index beyond point dimension");
      return p[n->coord];
    case Kind::Add:
      return eval_node(n->a.get(), p) + eval_node(n->b.get(), p);
    case Kind::Sub:
      return eval_node(n->a.get(), p) - eval_node(n->b.get(), p);
    case Kind::Mul:
      return eval_node(n->a.get(), p) * eval_node(n->b.get(), p);
    case Kind::Div:
      return eval_node(n->a.get(), p) / eval_node(n->b.get(), p);
    case Kind::Pow:
      return std::pow(eval_node(n->a.get(), p), n->ipow);
    case Kind::Sin:
      return std::sin(eval_node(n->a.get(), p));
    case Kind::Cos:
      return std::cos(eval_node(n->a.get(), p));
    case Kind::Tan:
      return std::tan(eval_node(n->a.get(), p));
    case Kind::Cot:
      return 1.0 / std::tan(eval_node(n->a.get(), p));
    case Kind::Sinh:
      return std::sinh(eval_node(n->a.get(), p));
    case Kind::Cosh:
      return std::cosh(eval_node(n->a.get(), p));
    case Kind::Tanh:
      return std::tanh(eval_node(n->a.get(), p));
    case Kind::Coth:
      return 1.0 / std::tanh(eval_node(n->a.get(), p));
    case Kind::Exp:
      return std::exp(eval_node(n->a.get(), p));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

double Expr::eval(const std::vector<double>& point) const {
  double v = eval_node(node_.get(), point);
  if (!std::isfinite(v)) throw std::domain_error("non-finite evaluation");
  return v;
}

Expr Expr::diff(int k) const {
  const Node* n = node_.get();
  Expr a = n->a ? Expr(n->a) : Expr();
  Expr b = n->b ? Expr(n->b) : Expr();
  switch (n->kind) {
    case Kind::Const:
      return constant(0);
    case Kind::Coord:
      return constant(n->coord == k ? 1 : 0);
    case Kind::Add:
      return a.diff(k) + b.diff(k);
    case Kind::Sub:
      return a.diff(k) - b.diff(k);
    case Kind::Mul:
      return a.diff(k) * b + a * b.diff(k);
    case Kind::Div:
      return (a.diff(k) * b - a * b.diff(k)) / pow_i(b, 2);
    case Kind::Pow:
      return constant(n->ipow) * pow_i(a, n->ipow - 1) * a.diff(k);
    case Kind::Sin:
      return e_cos(a) * a.diff(k);
    case Kind::Cos:
      return -(e_sin(a) * a.diff(k));
    case Kind::Tan:
      return (constant(1) + pow_i(e_tan(a), 2)) * a.diff(k);
    case Kind::Cot:
      return -((constant(1) + pow_i(e_cot(a), 2)) * a.diff(k));
    case Kind::Sinh:
      return e_cosh(a) * a.diff(k);
    case Kind::Cosh:
      return e_sinh(a) * a.diff(k);
    case Kind::Tanh:
      return (constant(1) - pow_i(e_tanh(a), 2)) * a.diff(k);
    case Kind::Coth:
      return (constant(1) - pow_i(e_coth(a), 2)) * a.diff(k);
    case Kind::Exp:
      return e_exp(a) * a.diff(k);
  }
  throw std::logic_error("unreachable");
}

namespace {

const char* fn_name(Kind k) {
  switch (k) {
    case Kind::Sin: return "sin";
    case Kind::Cos: return "cos";
    case Kind::Tan: return "tan";
    case Kind::Cot: return "cot";
    case Kind::Sinh: return "sinh";
    case Kind::Cosh: return "cosh";
    case Kind::Tanh: return "tanh";
    case Kind::Coth: return "coth";
    case Kind::Exp: return "exp";
    default: return "?";
  }
}

std::string str_node(const Expr::Node* n) {
  switch (n->kind) {
    case Kind::Const:
      return rat_to_string(n->cval);
    case Kind::Coord:
      return "x" + std::to_string(n->coord + 1);
    case Kind::Add:
      return "(" + str_node(n->a.get()) + "+" + str_node(n->b.get()) + ")";
    case Kind::Sub:
      return "(" + str_node(n->a.get()) + "-" + str_node(n->b.get()) + ")";
    case Kind::Mul:
      return "(" + str_node(n->a.get()) + "*" + str_node(n->b.get()) + ")";
    case Kind::Div:
      return "(" + str_node(n->a.get()) + "/" + str_node(n->b.get()) + ")";
    case Kind::Pow:
      return str_node(n->a.get()) + "^" + std::to_string(n->ipow);
    default:
      return std::string(fn_name(n->kind)) + "(" + str_node(n->a.get()) + ")";
  }
}

}  // namespace

std::string Expr::str() const { return str_node(node_.get()); }

}  // namespace petrov
