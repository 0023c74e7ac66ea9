#include "classify.hpp"

#include <random>
#include <stdexcept>

namespace petrov {

std::string iso_letter(const IsotropyType& t) {
  switch (t.kind) {
    case Iso::Rotation: return "R";
    case Iso::Boost: return "B";
    case Iso::Null: return "N";
    case Iso::Unclassified: return "U";
  }
  return "U";
}

namespace {

// Deterministic lift basis for g/h: coordinate vectors whose indices skip the
// first index where h0 is nonzero after reduction.
std::vector<QVec> quotient_lift_basis(const LieAlgebra& g, const QVec& h0) {
  int n = g.dim;
  std::vector<QVec> lift;
  std::vector<QVec> have = {h0};
  for (int i = 0; i < n && static_cast<int>(lift.size()) < n - 1; ++i) {
    QVec e = unit_vec(n, i);
    std::vector<QVec> trial = have;
    trial.push_back(e);
    if (rank(QMat::from_rows(trial)) > rank(QMat::from_rows(have))) {
      have.push_back(e);
      lift.push_back(e);
    }
  }
  return lift;
}

}  // namespace

QMat quotient_matrix(const LieAlgebra& g, const SubalgebraLine& h) {
  bool nonzero = false;
  for (const auto& x : h.h0)
    if (!x.is_zero()) nonzero = true;
  if (!nonzero) throw std::invalid_argument("h0 must be nonzero");
  Complement m{quotient_lift_basis(g, h.h0)};
  return quotient_action(g, h, m, QuotientMode::Quotient);
}

int kappa(const LieAlgebra& g, const SubalgebraLine& h) {
  QMat M = quotient_matrix(g, h);
  return static_cast<int>(nullspace(M).size());
}

std::vector<SymForm> invariant_forms(const QMat& M) {
  if (!M.is_square() || (M.rows != 2 && M.rows != 3))
    throw std::invalid_argument("invariant_forms needs a 2x2 or 3x3 matrix");
  int n = M.rows;
  int d = sym_space_dim(n);
  // Operator Q -> M^T Q + Q M on symmetric coordinates.
  QMat op(d, d);
  for (int k = 0; k < d; ++k) {
    QVec basis_coords(d);
    basis_coords[k] = 1;
    SymForm q = sym_from_coords(n, basis_coords);
    QMat img = M.transpose() * q.q + q.q * M;
    QVec coords = sym_coords(SymForm::from_matrix(img));
    for (int i = 0; i < d; ++i) op.at(i, k) = coords[i];
  }
  std::vector<SymForm> out;
  for (const auto& v : nullspace(op)) out.push_back(sym_from_coords(n, v));
  return out;
}

ComplementType complement_type(const LieAlgebra& g, const SubalgebraLine& h,
                               const Complement& m) {
  if (!is_basis_with(g, h.h0, m.vectors))
    throw std::invalid_argument("h0 and complement do not form a basis");
  ComplementType t;
  t.reductive = is_reductive(g, h.h0, m.vectors);
  if (!t.reductive) return t;
  std::vector<QVec> hspan = {h.h0};
  t.symmetric = bracket_contained(g, m.vectors, m.vectors, hspan);
  t.ideal = bracket_contained(g, basis_vectors(g.dim), m.vectors, m.vectors);
  return t;
}

IsotropyType isotropy_type(const QMat& M) {
  if (!M.is_square() || (M.rows != 2 && M.rows != 3))
    throw std::invalid_argument("isotropy_type needs a 2x2 or 3x3 matrix");
  QVec cp = char_poly(M);
  Rational p, q;
  if (M.rows == 3) {
    if (!cp[3].is_zero()) {
      IsotropyType t;
      t.kind = Iso::Unclassified;
      t.detail = "no zero eigenvalue: char poly l^3";
      if (!cp[1].is_zero()) t.detail += "+(" + rat_to_string(cp[1]) + ")l^2";
      t.detail += "+(" + rat_to_string(cp[2]) + ")l+(" + rat_to_string(cp[3]) + ")";
      return t;
    }
    p = cp[1];
    q = cp[2];
  } else {
    p = cp[1];
    q = cp[2];
  }
  IsotropyType t;
  if (q.is_zero() && p.is_zero()) {
    t.kind = Iso::Null;
    return t;
  }
  if (!q.is_zero()) {
    Rational disc = p * p - 4 * q;
    if (disc > 0) {
      t.kind = Iso::Boost;
      return t;
    }
    if (disc < 0) {
      t.kind = Iso::Rotation;
      return t;
    }
    t.kind = Iso::Unclassified;
    t.detail = "double real eigenvalue: l^2+(" + rat_to_string(p) + ")l+(" +
               rat_to_string(q) + ")";
    return t;
  }
  t.kind = Iso::Unclassified;
  t.detail = "single nonzero eigenvalue: l^2+(" + rat_to_string(p) + ")l";
  return t;
}

namespace {

bool want_lorentz(const Signature& s, int n) {
  if (s.zero != 0) return false;
  return (s.pos == n - 1 && s.neg == 1) || (s.pos == 1 && s.neg == n - 1);
}

bool want_riemannian(const Signature& s, int n) {
  if (s.zero != 0) return false;
  return s.pos == n || s.neg == n;
}

SymForm normalize_sign(const SymForm& f, bool positive_major) {
  Signature s = signature(f);
  bool flip = positive_major ? (s.pos < s.neg) : false;
  if (!flip) return f;
  SymForm g = f;
  for (auto& x : g.q.a) x = -x;
  return g;
}

}  // namespace

Admissibility admissibility(const std::vector<SymForm>& forms,
                            std::uint64_t seed, int trials) {
  Admissibility adm;
  if (forms.empty()) return adm;
  int n = forms[0].side();
  size_t k = forms.size();

  auto combine = [&](const std::vector<Rational>& coef) {
    SymForm f(n);
    for (size_t i = 0; i < k; ++i) {
      if (coef[i].is_zero()) continue;
      for (size_t t = 0; t < f.q.a.size(); ++t)
        f.q.a[t] += coef[i] * forms[i].q.a[t];
    }
    return f;
  };

  auto consider = [&](const SymForm& f) {
    Signature s = signature(f);
    if (!adm.lorentz && want_lorentz(s, n)) adm.lorentz = normalize_sign(f, true);
    if (!adm.riemannian && want_riemannian(s, n))
      adm.riemannian = normalize_sign(f, true);
  };

  // Deterministic sweep over {-2..2}^k.
  const int span = 5;
  long total = 1;
  for (size_t i = 0; i < k; ++i) total *= span;
  for (long t = 0; t < total && !(adm.lorentz && adm.riemannian); ++t) {
    long v = t;
    std::vector<Rational> coef(k);
    for (size_t i = 0; i < k; ++i) {
      coef[i] = Rational(static_cast<long>(v % span) - 2);
      v /= span;
    }
    consider(combine(coef));
  }

  // Seeded random rational sampling as a fallback.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int t = 0; t < trials && !(adm.lorentz && adm.riemannian); ++t) {
    std::vector<Rational> coef(k);
    for (size_t i = 0; i < k; ++i) {
      long num = static_cast<long>(rng() % 19) - 9;
      long den = static_cast<long>(rng() % 4) + 1;
      coef[i] = Rational(num, den);
    }
    consider(combine(coef));
  }
  return adm;
}

Complement find_reductive_complement(const LieAlgebra& g,
                                     const SubalgebraLine& h) {
  int n = g.dim;
  // Coordinate complements in lexicographic index order.
  std::vector<int> idx(n - 1);
  std::vector<std::vector<int>> subsets;
  std::function<void(int, std::vector<int>&)> rec = [&](int start,
                                                        std::vector<int>& cur) {
    if (static_cast<int>(cur.size()) == n - 1) {
      subsets.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1, cur);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(0, cur);
  for (const auto& s : subsets) {
    std::vector<QVec> m;
    for (int i : s) m.push_back(unit_vec(n, i));
    if (is_basis_with(g, h.h0, m) && is_reductive(g, h.h0, m))
      return Complement{m};
  }
  // Generic solve: complements are graphs w_i + a_i h0 over the lift basis;
  // reductivity is the linear system A^T a = b.
  std::vector<QVec> lift;
  {
    std::vector<QVec> have = {h.h0};
    for (int i = 0; i < n; ++i) {
      QVec e = unit_vec(n, i);
      std::vector<QVec> trial = have;
      trial.push_back(e);
      if (rank(QMat::from_rows(trial)) > rank(QMat::from_rows(have))) {
        have.push_back(e);
        lift.push_back(e);
      }
    }
  }
  int kdim = n - 1;
  QMat basis(n, n);
  for (int j = 0; j < kdim; ++j)
    for (int i = 0; i < n; ++i) basis.at(i, j) = lift[j][i];
  for (int i = 0; i < n; ++i) basis.at(i, kdim) = h.h0[i];
  QMat binv = inverse(basis);
  QMat A(kdim, kdim);
  QVec b(kdim);
  for (int j = 0; j < kdim; ++j) {
    QVec coords = mat_vec(binv, g.bracket(h.h0, lift[j]));
    for (int i = 0; i < kdim; ++i) A.at(i, j) = coords[i];
    b[j] = coords[kdim];
  }
  auto alpha = solve(A.transpose(), b);
  if (!alpha)
    throw std::domain_error("no reductive complement exists for this pair");
  std::vector<QVec> m;
  for (int j = 0; j < kdim; ++j) {
    QVec v = lift[j];
    for (int i = 0; i < n; ++i) v[i] += (*alpha)[j] * h.h0[i];
    m.push_back(std::move(v));
  }
  return Complement{m};
}

ClassificationReport classify_pair(const Catalog& cat, const LieAlgebra& g,
                                   const SubalgebraLine& h,
                                   const std::optional<Complement>& m_in,
                                   std::uint64_t seed) {
  bool nonzero = false;
  for (const auto& x : h.h0)
    if (!x.is_zero()) nonzero = true;
  if (!nonzero) throw std::invalid_argument("h0 must be nonzero");

  ClassificationReport rep;
  rep.algebra_key = g.key;
  rep.params = g.params;
  rep.h0 = h.h0;
  rep.seed = seed;

  Complement m;
  if (m_in) {
    m = *m_in;
    if (!is_basis_with(g, h.h0, m.vectors))
      throw std::invalid_argument("h0 and complement do not form a basis");
  } else {
    m = find_reductive_complement(g, h);
    rep.complement_searched = true;
  }
  rep.complement = m.vectors;
  rep.ctype = complement_type(g, h, m);
  rep.action = rep.ctype.reductive
                   ? quotient_action(g, h, m, QuotientMode::Strict)
                   : quotient_action(g, h, m, QuotientMode::Quotient);
  rep.kappa = static_cast<int>(nullspace(rep.action).size());
  rep.iso = isotropy_type(rep.action);
  rep.forms = invariant_forms(rep.action);
  rep.adm = admissibility(rep.forms, seed);
  rep.effective = !rep.action.is_zero();

  // 3-dimensional quotients must admit a Lorentz inner product; on the
  // 2-dimensional orbits any nondegenerate invariant metric is listed.
  bool admits = g.dim == 4 ? rep.adm.lorentz.has_value()
                           : (rep.adm.lorentz.has_value() ||
                              rep.adm.riemannian.has_value());
  if (rep.effective && admits) {
    auto ids = petrov_identify(cat, g.key, g.params, rep.iso,
                               rep.ctype.symmetric, rep.ctype.ideal);
    if (!ids.empty()) rep.petrov = ids.front();
  }
  return rep;
}

std::vector<std::string> petrov_identify(const Catalog& cat,
                                         const std::string& algebra_key,
                                         const Params& params,
                                         const IsotropyType& iso, bool symmetric,
                                         bool ideal) {
  if (iso.kind == Iso::Unclassified) return {};
  std::string letter = iso_letter(iso);
  for (const auto& row : cat.petrov_key) {
    if (row.algebra_key != algebra_key) continue;
    if (!conds_hold(row.regime, params)) continue;
    if (std::string(1, row.iso) != letter) continue;
    if (row.symmetric != symmetric || row.ideal != ideal) continue;
    return row.ids;
  }
  return {};
}

std::optional<Reduction> reduce_decomposable(const Catalog& cat,
                                             const std::string& g4_key,
                                             const Params& params,
                                             const SubalgebraLine& h) {
  auto [entry, p] = cat.resolve(g4_key, params);
  if (!entry->decomposition_key) return std::nullopt;
  if (static_cast<int>(h.h0.size()) != entry->dim)
    throw std::invalid_argument("h0 length mismatch");
  // The abelian summand is the last coordinate.
  if (!h.h0.back().is_zero()) return std::nullopt;
  // Build a literal 3-D key so regime routing applies (e.g. L(3,4,x) at x=0
  // lands on the L(3,4,0) worksheet).
  std::string pattern = *entry->decomposition_key;
  std::string literal;
  for (size_t i = 0; i < pattern.size(); ++i) {
    bool symbol = isalpha(static_cast<unsigned char>(pattern[i])) &&
                  pattern[i] != 'L' && p.count(std::string(1, pattern[i]));
    if (symbol)
      literal += rat_to_string(p.at(std::string(1, pattern[i])));
    else
      literal += pattern[i];
  }
  auto [g3_entry, g3_params] = cat.resolve(literal, {});
  Reduction r;
  r.g3_key = g3_entry->key;
  r.g3_params = g3_params;
  r.h0 = QVec(h.h0.begin(), h.h0.end() - 1);
  return r;
}

}  // namespace petrov
