#include "lie_algebra.hpp"

#include <stdexcept>

namespace petrov {

LieAlgebra::LieAlgebra(int d, std::string k, Params p)
    : dim(d), key(std::move(k)), params(std::move(p)) {
  c.assign(dim, std::vector<QVec>(dim, QVec(dim)));
}

void LieAlgebra::set_bracket(int i, int j, const QVec& coeffs) {
  if (i == j) throw std::invalid_argument("bracket indices must differ");
  if (static_cast<int>(coeffs.size()) != dim)
    throw std::invalid_argument("coefficient length mismatch");
  c[i][j] = coeffs;
  QVec neg(dim);
  for (int k = 0; k < dim; ++k) neg[k] = -coeffs[k];
  c[j][i] = neg;
}

QVec LieAlgebra::bracket(const QVec& u, const QVec& v) const {
  if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim)
    throw std::invalid_argument("vector length mismatch");
  QVec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (v[j].is_zero() || i == j) continue;
      Rational f = u[i] * v[j];
      for (int k = 0; k < dim; ++k)
        if (!c[i][j][k].is_zero()) out[k] += f * c[i][j][k];
    }
  }
  return out;
}

bool LieAlgebra::jacobi_check() const {
  // Antisymmetry of the stored tensor.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (c[i][j][k] != -c[j][i][k]) return false;
  auto e = basis_vectors(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        QVec s = bracket(bracket(e[i], e[j]), e[k]);
        QVec t = bracket(bracket(e[j], e[k]), e[i]);
        QVec u = bracket(bracket(e[k], e[i]), e[j]);
        for (int a = 0; a < dim; ++a)
          if (!(s[a] + t[a] + u[a]).is_zero()) return false;
      }
  return true;
}

QMat LieAlgebra::ad_matrix(const QVec& v) const {
  QMat m(dim, dim);
  auto e = basis_vectors(dim);
  for (int j = 0; j < dim; ++j) {
    QVec col = bracket(v, e[j]);
    for (int i = 0; i < dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::vector<QVec> basis_vectors(int dim) {
  std::vector<QVec> e;
  e.reserve(dim);
  for (int i = 0; i < dim; ++i) e.push_back(unit_vec(dim, i));
  return e;
}

QVec unit_vec(int dim, int i) {
  QVec v(dim);
  v[i] = 1;
  return v;
}

bool is_basis_with(const LieAlgebra& g, const QVec& h0,
                   const std::vector<QVec>& m) {
  if (static_cast<int>(m.size()) != g.dim - 1) return false;
  std::vector<QVec> all = m;
  all.push_back(h0);
  return spans_whole_space(all, g.dim);
}

bool is_reductive(const LieAlgebra& g, const QVec& h0,
                  const std::vector<QVec>& m) {
  for (const auto& mi : m)
    if (!in_span(g.bracket(h0, mi), m)) return false;
  return true;
}

QMat quotient_action(const LieAlgebra& g, const SubalgebraLine& h,
                     const Complement& m, QuotientMode mode) {
  const QVec& h0 = h.h0;
  if (!is_basis_with(g, h0, m.vectors))
    throw std::invalid_argument("h0 and complement do not form a basis");
  int n = g.dim;
  int k = n - 1;
  // Change of basis: columns are the complement vectors followed by h0.
  QMat basis(n, n);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) basis.at(i, j) = m.vectors[j][i];
  for (int i = 0; i < n; ++i) basis.at(i, k) = h0[i];
  QMat binv = inverse(basis);
  QMat out(k, k);
  for (int j = 0; j < k; ++j) {
    QVec img = g.bracket(h0, m.vectors[j]);
    QVec coords = mat_vec(binv, img);
    if (mode == QuotientMode::Strict && !coords[k].is_zero())
      throw std::domain_error("complement is not reductive");
    for (int i = 0; i < k; ++i) out.at(i, j) = coords[i];
  }
  return out;
}

bool bracket_contained(const LieAlgebra& g, const std::vector<QVec>& A,
                       const std::vector<QVec>& B,
                       const std::vector<QVec>& C) {
  for (const auto& a : A)
    for (const auto& b : B)
      if (!in_span(g.bracket(a, b), C)) return false;
  return true;
}

}  // namespace petrov
