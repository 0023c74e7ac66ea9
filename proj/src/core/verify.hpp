#ifndef PETROV_VERIFY_HPP
#define PETROV_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace petrov {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 200;        // draws per generator / invariant
  int vectors = 1000;      // canonicalization vectors per regime
  double tol = 1e-9;
  int jobs = 1;
};

std::vector<CheckResult> verify_jacobi(const Catalog& cat,
                                       const VerifyOptions& o);
std::vector<CheckResult> verify_automorphisms(const Catalog& cat,
                                              const VerifyOptions& o);
std::vector<CheckResult> verify_adjoint_invariants(const Catalog& cat,
                                                   const VerifyOptions& o);
std::vector<CheckResult> verify_canonicalization(const Catalog& cat,
                                                 const VerifyOptions& o);
// suite: "g3" | "g4" | "metrics" | "reductions" | "worksheets" | "key" | "all"
std::vector<CheckResult> verify_tables(const Catalog& cat,
                                       const VerifyOptions& o,
                                       const std::string& suite);
std::vector<CheckResult> verify_actions(const Catalog& cat,
                                        const VerifyOptions& o);
std::vector<CheckResult> verify_all(const Catalog& cat, const VerifyOptions& o);

bool all_pass(const std::vector<CheckResult>& rs);

// Deterministic rational sampler used by the property suites: components
// p/q with p in [-9,9], q in [1,4].
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed);
  Rational next();
  // Quarter-integer draw in [-2, 2]; used for generator parameters so that
  // exponential formulas stay within the absolute comparison tolerance.
  Rational next_bounded();
  QVec next_vec(int dim);
  QVec next_nonzero_vec(int dim);
  std::uint64_t next_raw();

 private:
  std::uint64_t state_;
};

}  // namespace petrov

#endif
