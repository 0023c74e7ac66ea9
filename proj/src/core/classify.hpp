#ifndef PETROV_CLASSIFY_HPP
#define PETROV_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "lie_algebra.hpp"

namespace petrov {

enum class Iso { Rotation, Boost, Null, Unclassified };

struct IsotropyType {
  Iso kind = Iso::Unclassified;
  std::string detail;  // offending spectrum description when unclassified

  bool operator==(const IsotropyType& o) const { return kind == o.kind; }
};

std::string iso_letter(const IsotropyType& t);  // "R" | "B" | "N" | "U"

struct ComplementType {
  bool reductive = false;
  bool symmetric = false;
  bool ideal = false;
};

struct Admissibility {
  std::optional<SymForm> lorentz;
  std::optional<SymForm> riemannian;
};

struct ClassificationReport {
  std::string algebra_key;
  Params params;
  QVec h0;
  std::vector<QVec> complement;
  bool complement_searched = false;
  int kappa = 0;
  QMat action;  // ad(h0) on the complement (or on g/h in quotient fallback)
  ComplementType ctype;
  IsotropyType iso;
  std::vector<SymForm> forms;
  Admissibility adm;
  bool effective = false;
  std::optional<std::string> petrov;  // normalized id; "M" for the omission
  std::uint64_t seed = 0;
};

// Kernel dimension of the ad(h0) action on g/h; complement independent.
int kappa(const LieAlgebra& g, const SubalgebraLine& h);

// Induced ad(h0) matrix on g/h in a deterministic lift basis (coordinate
// vectors completing h0). Similar to the strict quotient_action matrix of any
// reductive complement.
QMat quotient_matrix(const LieAlgebra& g, const SubalgebraLine& h);

// Basis of { Q symmetric : M^T Q + Q M = 0 }, side 2 or 3.
std::vector<SymForm> invariant_forms(const QMat& M);

ComplementType complement_type(const LieAlgebra& g, const SubalgebraLine& h,
                               const Complement& m);

// Eigenvalue rule on the exact characteristic polynomial. Side 3 requires a
// zero eigenvalue before factoring; side 2 uses the quadratic directly.
IsotropyType isotropy_type(const QMat& M);

// Searches the rational span for Lorentz / Riemannian witnesses: exhaustive
// sweep over coefficient tuples in {-2..2}^k, then seeded random sampling.
Admissibility admissibility(const std::vector<SymForm>& forms,
                            std::uint64_t seed = 0, int trials = 256);

// Reductive complement search: coordinate complements in lexicographic
// order, then the generic linear solve. Throws std::domain_error when none
// exists.
Complement find_reductive_complement(const LieAlgebra& g,
                                     const SubalgebraLine& h);

ClassificationReport classify_pair(const Catalog& cat, const LieAlgebra& g,
                                   const SubalgebraLine& h,
                                   const std::optional<Complement>& m,
                                   std::uint64_t seed = 0);

// Table lookup behind Theorem-style identification: all ids assigned to the
// (algebra, isotropy type, complement type) key, primary id first. Empty when
// the key has no row.
std::vector<std::string> petrov_identify(const Catalog& cat,
                                         const std::string& algebra_key,
                                         const Params& params,
                                         const IsotropyType& iso, bool symmetric,
                                         bool ideal);

struct Reduction {
  std::string g3_key;
  Params g3_params;
  QVec h0;
};

// For decomposable 4-D algebras (3-D part + abelian line), the induced 3-D
// pair, provided h0 lies inside the 3-D component.
std::optional<Reduction> reduce_decomposable(const Catalog& cat,
                                             const std::string& g4_key,
                                             const Params& params,
                                             const SubalgebraLine& h);

}  // namespace petrov

#endif
