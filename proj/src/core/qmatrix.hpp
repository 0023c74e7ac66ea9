#ifndef PETROV_QMATRIX_HPP
#define PETROV_QMATRIX_HPP

#include <utility>
#include <vector>

#include "rational.hpp"

namespace petrov {

using QVec = std::vector<Rational>;

// Dense matrix over the rationals, row major.
struct QMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static QMat identity(int n);
  static QMat from_rows(const std::vector<QVec>& rows);
  static QMat from_cols(const std::vector<QVec>& cols);

  QVec row(int i) const;
  QVec col(int j) const;
  bool is_zero() const;
  bool is_square() const { return rows == cols; }
  QMat transpose() const;
};

bool operator==(const QMat& x, const QMat& y);
QMat operator+(const QMat& x, const QMat& y);
QMat operator*(const QMat& x, const QMat& y);
QVec mat_vec(const QMat& m, const QVec& v);

// Reduced row-echelon form plus the (strictly increasing) pivot columns.
std::pair<QMat, std::vector<int>> rref(QMat m);

int rank(const QMat& m);

// Exact basis of { v : m v = 0 }.
std::vector<QVec> nullspace(const QMat& m);

Rational det(const QMat& m);

// Inverse of a square nonsingular matrix; throws on singular input.
QMat inverse(const QMat& m);

// Monic characteristic polynomial det(lambda I - m); coefficients returned
// highest degree first (Faddeev–LeVerrier, exact).
QVec char_poly(const QMat& m);

// True iff span(a) == span(b); all vectors must share the ambient dimension.
bool subspace_equal(const std::vector<QVec>& a, const std::vector<QVec>& b);

bool spans_whole_space(const std::vector<QVec>& vecs, int dim);
bool in_span(const QVec& v, const std::vector<QVec>& basis);

// Particular solution of A x = b, if one exists.
std::optional<QVec> solve(const QMat& A, const QVec& b);

// Symmetric bilinear form of side 2 or 3, stored as a full matrix.
struct SymForm {
  QMat q;

  SymForm() = default;
  explicit SymForm(int n) : q(n, n) {}
  static SymForm from_matrix(const QMat& m);
  static SymForm diag(const QVec& d);

  int side() const { return q.rows; }
  bool operator==(const SymForm& o) const { return q == o.q; }
};

// Coordinates of a form in the standard symmetric basis. Order for side 3:
// D1, D2, D3, Q12, Q13, Q23; for side 2: D1, D2, Q12.
QVec sym_coords(const SymForm& f);
SymForm sym_from_coords(int side, const QVec& coords);
int sym_space_dim(int side);

// Inertia (n_pos, n_neg, n_zero), computed exactly from sign changes in the
// characteristic polynomial (valid because symmetric forms have real spectra).
struct Signature {
  int pos = 0, neg = 0, zero = 0;
  bool operator==(const Signature& o) const {
    return pos == o.pos && neg == o.neg && zero == o.zero;
  }
};
Signature signature(const SymForm& f);

}  // namespace petrov

#endif
