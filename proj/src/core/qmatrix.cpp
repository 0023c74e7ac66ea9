#include "qmatrix.hpp"

#include <stdexcept>

namespace petrov {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMat();
  QMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::from_cols(const std::vector<QVec>& cols) {
  return from_rows(cols).transpose();
}

QVec QMat::row(int i) const {
  QVec v(cols);
  for (int j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

QVec QMat::col(int j) const {
  QVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

bool QMat::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

QMat QMat::transpose() const {
  QMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool operator==(const QMat& x, const QMat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

QMat operator+(const QMat& x, const QMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("shape mismatch");
  QMat r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
  return r;
}

QMat operator*(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("shape mismatch");
  QMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

QVec mat_vec(const QMat& m, const QVec& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw std::invalid_argument("shape mismatch");
  QVec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

std::pair<QMat, std::vector<int>> rref(QMat m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) /= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const QMat& m) { return static_cast<int>(rref(m).second.size()); }

std::vector<QVec> nullspace(const QMat& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    QVec v(m.cols);
    v[c] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(const QMat& m) {
  if (!m.is_square()) throw std::invalid_argument("det of non-square matrix");
  QMat w = m;
  Rational d = 1;
  for (int c = 0; c < w.cols; ++c) {
    int p = -1;
    for (int i = c; i < w.rows; ++i)
      if (!w.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(p, j), w.at(c, j));
      d = -d;
    }
    d *= w.at(c, c);
    for (int i = c + 1; i < w.rows; ++i) {
      if (w.at(i, c).is_zero()) continue;
      Rational f = w.at(i, c) / w.at(c, c);
      for (int j = c; j < w.cols; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  return d;
}

QMat inverse(const QMat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows;
  QMat w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, n + i) = 1;
  }
  auto [r, pivots] = rref(std::move(w));
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::domain_error("singular matrix");
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

QVec char_poly(const QMat& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  int n = m.rows;
  QVec traces(n + 1);
  QMat mk = QMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    for (int i = 0; i < n; ++i) traces[k] += mk.at(i, i);
  }
  // Newton's identities: t_k + c_1 t_{k-1} + ... + c_{k-1} t_1 + k c_k = 0.
  QVec coeffs(n + 1);
  coeffs[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational s = traces[k];
    for (int j = 1; j < k; ++j) s += coeffs[j] * traces[k - j];
    coeffs[k] = -s / k;
  }
  return coeffs;
}

static QMat row_space_canonical(const std::vector<QVec>& vecs) {
  if (vecs.empty()) return QMat();
  auto [r, pivots] = rref(QMat::from_rows(vecs));
  QMat out(static_cast<int>(pivots.size()), r.cols);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < out.cols; ++j) out.at(i, j) = r.at(i, j);
  return out;
}

bool subspace_equal(const std::vector<QVec>& a, const std::vector<QVec>& b) {
  size_t da = a.empty() ? 0 : a[0].size();
  size_t db = b.empty() ? 0 : b[0].size();
  if (!a.empty() && !b.empty() && da != db)
    throw std::invalid_argument("ambient dimension mismatch");
  return row_space_canonical(a) == row_space_canonical(b);
}

bool spans_whole_space(const std::vector<QVec>& vecs, int dim) {
  if (vecs.empty()) return dim == 0;
  return rank(QMat::from_rows(vecs)) == dim;
}

bool in_span(const QVec& v, const std::vector<QVec>& basis) {
  std::vector<QVec> ext = basis;
  ext.push_back(v);
  if (basis.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  return rank(QMat::from_rows(basis)) == rank(QMat::from_rows(ext));
}

std::optional<QVec> solve(const QMat& A, const QVec& b) {
  if (static_cast<int>(b.size()) != A.rows)
    throw std::invalid_argument("shape mismatch");
  QMat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  auto [r, pivots] = rref(std::move(aug));
  for (int c : pivots)
    if (c == A.cols) return std::nullopt;  // inconsistent
  QVec x(A.cols);
  for (size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = r.at(static_cast<int>(k), A.cols);
  return x;
}

SymForm SymForm::from_matrix(const QMat& m) {
  if (!m.is_square()) throw std::invalid_argument("form must be square");
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i))
        throw std::invalid_argument("form must be symmetric");
  SymForm f;
  f.q = m;
  return f;
}

SymForm SymForm::diag(const QVec& d) {
  SymForm f(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) f.q.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return f;
}

int sym_space_dim(int side) { return side * (side + 1) / 2; }

QVec sym_coords(const SymForm& f) {
  int n = f.side();
  QVec c;
  c.reserve(sym_space_dim(n));
  for (int i = 0; i < n; ++i) c.push_back(f.q.at(i, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c.push_back(f.q.at(i, j));
  return c;
}

SymForm sym_from_coords(int side, const QVec& coords) {
  if (static_cast<int>(coords.size()) != sym_space_dim(side))
    throw std::invalid_argument("bad coordinate count");
  SymForm f(side);
  int k = 0;
  for (int i = 0; i < side; ++i) f.q.at(i, i) = coords[k++];
  for (int i = 0; i < side; ++i)
    for (int j = i + 1; j < side; ++j) {
      f.q.at(i, j) = coords[k];
      f.q.at(j, i) = coords[k];
      ++k;
    }
  return f;
}

Signature signature(const SymForm& f) {
  QVec p = char_poly(f.q);  // monic, highest degree first
  int n = f.side();
  // Multiplicity of the zero eigenvalue = number of trailing zero coefficients.
  int zero = 0;
  while (zero < n && p[n - zero].is_zero()) ++zero;
  // Descartes on the nonzero part: all roots are real, so the number of sign
  // changes counts the positive roots exactly.
  int pos = 0;
  int last = 0;
  for (int k = 0; k <= n - zero; ++k) {
    int s = rat_signum(p[k]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++pos;
    last = s;
  }
  Signature sig;
  sig.zero = zero;
  sig.pos = pos;
  sig.neg = n - zero - pos;
  return sig;
}

}  // namespace petrov
