#ifndef PETROV_CANONICAL_HPP
#define PETROV_CANONICAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "classify.hpp"

namespace petrov {

struct TranscriptStep {
  std::string gen;
  Scalar param;
  bool exact = true;
};

struct CanonicalResult {
  std::string case_id;
  QVec representative;  // printed target, exact
  SVec transformed;     // pipeline applied to the input vector
  bool exact = true;    // whole pipeline stayed in exact arithmetic
  std::vector<TranscriptStep> transcript;
};

SVec apply_generator(const AutoGen& gen, const Scalar& t, const SVec& v,
                     const Params& p);

// True iff the generator at parameter t preserves the bracket on all basis
// pairs (exact when everything stays rational, within tolerance otherwise).
bool check_automorphism(const LieAlgebra& g, const AutoGen& gen,
                        const Scalar& t);

std::map<std::string, Scalar> adjoint_invariants(const Catalog& cat,
                                                 const std::string& key,
                                                 const Params& params,
                                                 const QVec& v);

// Runs the printed case analysis: first matching guard wins, its pipeline is
// applied (the projective scaling last), and the result is checked against
// the printed representative.
CanonicalResult canonicalize(const Catalog& cat, const std::string& key,
                             const Params& params, const QVec& v);

struct EnumeratedSubalgebra {
  QVec representative;
  std::optional<Rational> family_value;  // sampled k, when parametric
  ClassificationReport report;
};

// The worksheet's inequivalent representatives for the matching regime, each
// classified with the worksheet's complement. Parametric families are sampled
// at k in {1, 2, -2} minus excluded values.
std::vector<EnumeratedSubalgebra> enumerate_subalgebras(const Catalog& cat,
                                                        const std::string& key,
                                                        const Params& params,
                                                        std::uint64_t seed = 0);

// Concrete complement of a worksheet row (free constants at zero).
Complement row_complement(const WorksheetRow& row, const Params& params,
                          const QVec& rep);
QVec row_rep(const WorksheetRow& row, const Params& params,
             const std::optional<Rational>& family_value);
std::vector<Rational> family_samples(const WorksheetRow& row);

// Resolves the printed quadratic-form names for a row to concrete forms of
// the given side.
std::vector<SymForm> resolve_form_names(const std::vector<std::string>& names,
                                        int side);

}  // namespace petrov

#endif
