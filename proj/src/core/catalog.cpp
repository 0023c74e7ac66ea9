#include "catalog.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace petrov {

// ---------------------------------------------------------------------------
// ParamExpr

namespace {

Rational eval_affine(const Rational& c0,
                     const std::vector<std::pair<std::string, Rational>>& terms,
                     const Params& p) {
  Rational v = c0;
  for (const auto& [name, coef] : terms) {
    auto it = p.find(name);
    if (it == p.end()) throw std::invalid_argument("missing parameter " + name);
    v += coef * it->second;
  }
  return v;
}

std::string affine_str(const Rational& c0,
                       const std::vector<std::pair<std::string, Rational>>& terms) {
  std::string s;
  if (!c0.is_zero() || terms.empty()) s = rat_to_string(c0);
  for (const auto& [name, coef] : terms) {
    if (coef.is_zero()) continue;
    std::string t;
    if (coef == 1)
      t = name;
    else if (coef == -1)
      t = "-" + name;
    else
      t = rat_to_string(coef) + "*" + name;
    if (s.empty() || t.front() == '-')
      s += t;
    else
      s += "+" + t;
  }
  return s;
}

}  // namespace

Rational ParamExpr::eval(const Params& p) const {
  Rational num = eval_affine(c0, terms, p);
  if (den_terms.empty() && den_c0 == 1) return num;
  Rational den = eval_affine(den_c0, den_terms, p);
  if (den.is_zero()) throw std::domain_error("zero denominator in " + str());
  return num / den;
}

std::string ParamExpr::str() const {
  std::string s = affine_str(c0, terms);
  if (!den_terms.empty() || den_c0 != 1)
    s = "(" + s + ")/(" + affine_str(den_c0, den_terms) + ")";
  return s;
}

ParamExpr pp(const std::string& name, const Rational& coef) {
  ParamExpr e;
  e.terms.emplace_back(name, coef);
  return e;
}

ParamExpr operator+(ParamExpr a, const ParamExpr& b) {
  a.c0 += b.c0;
  for (const auto& t : b.terms) {
    bool merged = false;
    for (auto& u : a.terms)
      if (u.first == t.first) {
        u.second += t.second;
        merged = true;
        break;
      }
    if (!merged) a.terms.push_back(t);
  }
  return a;
}

ParamExpr operator-(ParamExpr a, const ParamExpr& b) { return a + (-b); }

ParamExpr operator*(const Rational& c, ParamExpr a) {
  a.c0 *= c;
  for (auto& t : a.terms) t.second *= c;
  return a;
}

ParamExpr operator-(const ParamExpr& a) { return Rational(-1) * a; }

ParamExpr pe_over(ParamExpr num, const ParamExpr& den) {
  if (!num.den_terms.empty() || !den.den_terms.empty())
    throw std::invalid_argument("nested ratios are not supported");
  num.den_c0 = den.c0;
  num.den_terms = den.terms;
  return num;
}

QVec eval_pe_vec(const PEVec& v, const Params& p) {
  QVec out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(e.eval(p));
  return out;
}

// ---------------------------------------------------------------------------
// Conditions

bool Cond::eval(const Params& p) const {
  auto it = p.find(lhs);
  if (it == p.end()) throw std::invalid_argument("missing parameter " + lhs);
  Rational l = it->second;
  if (!lhs_plus.empty()) {
    auto kt = p.find(lhs_plus);
    if (kt == p.end())
      throw std::invalid_argument("missing parameter " + lhs_plus);
    l += kt->second;
  }
  if (lhs_abs) l = rat_abs(l);
  Rational r;
  if (rhs_is_param) {
    auto jt = p.find(rhs_param);
    if (jt == p.end())
      throw std::invalid_argument("missing parameter " + rhs_param);
    r = jt->second;
  } else {
    r = rhs_const;
  }
  switch (op) {
    case Op::Eq: return l == r;
    case Op::Ne: return l != r;
    case Op::Lt: return l < r;
    case Op::Le: return l <= r;
    case Op::Gt: return l > r;
    case Op::Ge: return l >= r;
  }
  return false;
}

std::string Cond::str() const {
  static const char* ops[] = {"=", "!=", "<", "<=", ">", ">="};
  std::string l = lhs;
  if (!lhs_plus.empty()) l += "+" + lhs_plus;
  if (lhs_abs) l = "|" + l + "|";
  std::string r = rhs_is_param ? rhs_param : rat_to_string(rhs_const);
  return l + ops[static_cast<int>(op)] + r;
}

static Cond make_cond(const std::string& p, Cond::Op op, const Rational& v,
                      bool absf = false) {
  Cond c;
  c.lhs = p;
  c.lhs_abs = absf;
  c.op = op;
  c.rhs_const = v;
  return c;
}

Cond c_eq(const std::string& p, const Rational& v) { return make_cond(p, Cond::Op::Eq, v); }
Cond c_ne(const std::string& p, const Rational& v) { return make_cond(p, Cond::Op::Ne, v); }
Cond c_lt(const std::string& p, const Rational& v) { return make_cond(p, Cond::Op::Lt, v); }
Cond c_le(const std::string& p, const Rational& v) { return make_cond(p, Cond::Op::Le, v); }
Cond c_gt(const std::string& p, const Rational& v) { return make_cond(p, Cond::Op::Gt, v); }
Cond c_ge(const std::string& p, const Rational& v) { return make_cond(p, Cond::Op::Ge, v); }
Cond c_abs_le(const std::string& p, const Rational& v) {
  return make_cond(p, Cond::Op::Le, v, true);
}

Cond c_le_pp(const std::string& p, const std::string& q) {
  Cond c;
  c.lhs = p;
  c.op = Cond::Op::Le;
  c.rhs_is_param = true;
  c.rhs_param = q;
  return c;
}

Cond c_ne_pp(const std::string& p, const std::string& q) {
  Cond c;
  c.lhs = p;
  c.op = Cond::Op::Ne;
  c.rhs_is_param = true;
  c.rhs_param = q;
  return c;
}

Cond c_sum_eq(const std::string& p, const std::string& q, const Rational& v) {
  Cond c;
  c.lhs = p;
  c.lhs_plus = q;
  c.op = Cond::Op::Eq;
  c.rhs_const = v;
  return c;
}

Cond c_sum_ne(const std::string& p, const std::string& q, const Rational& v) {
  Cond c = c_sum_eq(p, q, v);
  c.op = Cond::Op::Ne;
  return c;
}

bool conds_hold(const std::vector<Cond>& cs, const Params& p) {
  for (const auto& c : cs)
    if (!c.eval(p)) return false;
  return true;
}

std::string conds_str(const std::vector<Cond>& cs) {
  std::string s;
  for (const auto& c : cs) {
    if (!s.empty()) s += ", ";
    s += c.str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Key parsing and resolution

namespace {

struct KeyPattern {
  std::string head;  // two leading integer fields, e.g. "4,-7"
  std::vector<std::string> slots;  // parameter slots: symbol or literal
};

KeyPattern parse_key(const std::string& key) {
  auto l = key.find('(');
  auto r = key.rfind(')');
  if (key.substr(0, l) != "L" || l == std::string::npos ||
      r == std::string::npos || r < l)
    throw std::invalid_argument("malformed algebra key: '" + key + "'");
  std::string inner = key.substr(l + 1, r - l - 1);
  std::vector<std::string> tok;
  std::string cur;
  for (char c : inner) {
    if (c == ',') {
      tok.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  tok.push_back(cur);
  if (tok.size() < 2) throw std::invalid_argument("malformed algebra key: '" + key + "'");
  KeyPattern p;
  p.head = tok[0] + "," + tok[1];
  for (size_t i = 2; i < tok.size(); ++i) p.slots.push_back(tok[i]);
  return p;
}

bool slot_is_symbol(const std::string& s) {
  return !s.empty() && (isalpha(static_cast<unsigned char>(s[0])));
}

// Also accepts "x=-1" style slots, binding the named parameter.
bool parse_slot_binding(const std::string& s, std::string& name, Rational& v) {
  auto eq = s.find('=');
  if (eq == std::string::npos) return false;
  name = s.substr(0, eq);
  v = rat_from_string(s.substr(eq + 1));
  return true;
}

}  // namespace

const CatalogEntry* Catalog::find_entry(const std::string& key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

const Worksheet* Catalog::find_worksheet(const std::string& key) const {
  for (const auto& w : worksheets)
    if (w.key == key) return &w;
  return nullptr;
}

const PetrovAction* Catalog::find_action(const std::string& id) const {
  for (const auto& a : actions)
    if (a.id == id) return &a;
  return nullptr;
}

std::pair<const CatalogEntry*, Params> Catalog::resolve(
    const std::string& key, const Params& params) const {
  KeyPattern q = parse_key(key);

  std::vector<const CatalogEntry*> candidates;
  for (const auto& e : entries) {
    KeyPattern ep = parse_key(e.key);
    if (ep.head == q.head && ep.slots.size() == q.slots.size())
      candidates.push_back(&e);
  }
  if (candidates.empty())
    throw std::invalid_argument("unknown algebra key: '" + key + "'");

  auto bind_against = [&](const CatalogEntry* e, Params& final) -> bool {
    KeyPattern ep = parse_key(e->key);
    Params bound = params;
    for (size_t i = 0; i < q.slots.size(); ++i) {
      const std::string& qs = q.slots[i];
      const std::string& es = ep.slots[i];
      std::string bname;
      Rational bval;
      std::optional<Rational> value;
      if (parse_slot_binding(qs, bname, bval)) {
        value = bval;
      } else if (!slot_is_symbol(qs)) {
        value = rat_from_string(qs);
      } else if (auto it = bound.find(qs); it != bound.end()) {
        value = it->second;
      }
      if (slot_is_symbol(es)) {
        if (!value) {
          if (!slot_is_symbol(qs)) return false;
          continue;  // symbolic slot left to the params map under es' name
        }
        auto it = bound.find(es);
        if (it != bound.end() && it->second != *value) return false;
        bound[es] = *value;
      } else {
        if (!value) return false;  // literal entry slot needs a value
        if (rat_from_string(es) != *value) return false;
      }
    }
    for (const auto& pn : e->param_names)
      if (!bound.count(pn)) return false;
    final.clear();
    for (const auto& pn : e->param_names) final[pn] = bound.at(pn);
    return true;
  };

  // A query whose pattern (slot for slot) names an entry is pinned to that
  // entry: violating its regime constraints is an error, not a reroute.
  for (const CatalogEntry* e : candidates) {
    KeyPattern ep = parse_key(e->key);
    if (ep.slots != q.slots) continue;
    Params final;
    if (!bind_against(e, final))
      throw std::invalid_argument("missing parameter values for " + e->key);
    if (!conds_hold(e->constraints, final))
      throw std::domain_error("parameters violate constraints of " + e->key +
                              " (" + conds_str(e->constraints) + ")");
    return {e, final};
  }

  // Otherwise route to the most specific regime whose constraints accept the
  // values.
  auto literal_count = [&](const CatalogEntry* e) {
    KeyPattern ep = parse_key(e->key);
    int n = 0;
    for (const auto& s : ep.slots)
      if (!slot_is_symbol(s)) ++n;
    return n;
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const CatalogEntry* a, const CatalogEntry* b) {
                     return literal_count(a) > literal_count(b);
                   });
  std::string last_violation;
  for (const CatalogEntry* e : candidates) {
    Params final;
    if (!bind_against(e, final)) continue;
    if (!conds_hold(e->constraints, final)) {
      last_violation = "parameters violate constraints of " + e->key + " (" +
                       conds_str(e->constraints) + ")";
      continue;
    }
    return {e, final};
  }
  if (!last_violation.empty()) throw std::domain_error(last_violation);
  throw std::invalid_argument("unknown algebra key: '" + key + "'");
}

LieAlgebra Catalog::instantiate(const CatalogEntry& e, const Params& p) const {
  LieAlgebra g(e.dim, e.key, p);
  for (const auto& b : e.brackets) g.set_bracket(b.i, b.j, eval_pe_vec(b.coeffs, p));
  return g;
}

LieAlgebra Catalog::get(const std::string& key, const Params& params) const {
  auto [e, p] = resolve(key, params);
  return instantiate(*e, p);
}

std::vector<const WorksheetRow*> Catalog::rows_for(const std::string& key,
                                                   const Params& params) const {
  auto [e, p] = resolve(key, params);
  const Worksheet* w = find_worksheet(e->key);
  if (!w) throw std::invalid_argument("no worksheet for " + e->key);
  std::vector<const WorksheetRow*> out;
  for (const auto& r : w->rows)
    if (conds_hold(r.when, p)) out.push_back(&r);
  return out;
}

const PetrovAction* Catalog::action(const std::string& id, bool* used_equiv,
                                    std::string* resolved) const {
  std::string n = normalize_petrov_id(id);
  if (used_equiv) *used_equiv = false;
  // Ids with their own recorded generators win; the remaining right-column
  // ids of the equivalence table resolve to their partner.
  if (const PetrovAction* own = find_action(n)) {
    if (resolved) *resolved = n;
    return own;
  }
  for (const auto& [left, right] : equivalences)
    if (right == n) {
      n = left;
      if (used_equiv) *used_equiv = true;
      break;
    }
  if (resolved) *resolved = n;
  return find_action(n);
}

std::string normalize_petrov_id(const std::string& id) {
  std::string t;
  for (char c : id)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  // Unify unicode minus / en-dash suffixes to "(-)".
  auto fix_sign = [&](const std::string& s) {
    std::string r;
    for (size_t i = 0; i < s.size(); ++i) r += s[i];
    return r;
  };
  t = fix_sign(t);
  auto dot = t.find('.');
  if (dot == std::string::npos) return t;
  std::string major = t.substr(0, dot);
  std::string rest = t.substr(dot + 1);
  std::string minor, suffix;
  size_t i = 0;
  while (i < rest.size() && isdigit(static_cast<unsigned char>(rest[i])))
    minor += rest[i++];
  suffix = rest.substr(i);
  // Two-digit zero-padded minors in the 32.* family ("32.3" == "32.03").
  if (major == "32" && minor.size() == 1) minor = "0" + minor;
  return major + "." + minor + suffix;
}

const Catalog& builtin_catalog() {
  static const Catalog c = [] {
    Catalog cat;
    catalog_detail::build_algebras(cat);
    catalog_detail::build_worksheets_3d(cat);
    catalog_detail::build_worksheets_4d(cat);
    catalog_detail::build_actions(cat);
    catalog_detail::build_goldens(cat);
    return cat;
  }();
  return c;
}

}  // namespace petrov
