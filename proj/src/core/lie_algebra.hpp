#ifndef PETROV_LIE_ALGEBRA_HPP
#define PETROV_LIE_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "qmatrix.hpp"

namespace petrov {

using Params = std::map<std::string, Rational>;

// Lie algebra given by structure constants over the rationals. The tensor is
// stored fully antisymmetric (both orders), validated on load.
struct LieAlgebra {
  int dim = 0;
  std::string key;
  Params params;
  // c[i][j] = coefficient vector of [e_i, e_j].
  std::vector<std::vector<QVec>> c;

  LieAlgebra() = default;
  LieAlgebra(int d, std::string k, Params p);

  // Registers [e_i, e_j] = coeffs (i < j); the opposite order is filled in.
  void set_bracket(int i, int j, const QVec& coeffs);

  QVec bracket(const QVec& u, const QVec& v) const;
  bool jacobi_check() const;
  QMat ad_matrix(const QVec& v) const;
};

// 1-D subalgebra, given by its nonzero spanning vector.
struct SubalgebraLine {
  QVec h0;
};

// Complement candidate: dim-1 vectors which together with h0 form a basis.
struct Complement {
  std::vector<QVec> vectors;
};

// Matrix of ad(h0) restricted to the complement, expressed in the complement
// basis. In strict mode the complement must be reductive; in quotient mode
// the component along h0 is dropped (the action on g/h).
enum class QuotientMode { Strict, Quotient };
QMat quotient_action(const LieAlgebra& g, const SubalgebraLine& h,
                     const Complement& m,
                     QuotientMode mode = QuotientMode::Strict);

bool is_basis_with(const LieAlgebra& g, const QVec& h0,
                   const std::vector<QVec>& m);
bool is_reductive(const LieAlgebra& g, const QVec& h0,
                  const std::vector<QVec>& m);

// True iff [a, b] lies in span(C) for all basis pairs a in A, b in B.
bool bracket_contained(const LieAlgebra& g, const std::vector<QVec>& A,
                       const std::vector<QVec>& B, const std::vector<QVec>& C);

std::vector<QVec> basis_vectors(int dim);  // unit coordinate vectors
QVec unit_vec(int dim, int i);

}  // namespace petrov

#endif
