#ifndef PETROV_CATALOG_BUILD_HPP
#define PETROV_CATALOG_BUILD_HPP

// Shared helpers for the worksheet data files. The generator formulas, case
// guards, pipelines and targets are transcribed verbatim as lambdas over the
// coordinates y1..yn of v (zero-indexed as v[0..n-1]).

#include "catalog.hpp"

namespace petrov {
namespace catalog_detail {

inline Rational RR(long n, long d = 1) { return Rational(n, d); }
inline Scalar SC(long n, long d = 1) { return Scalar(Rational(n, d)); }

inline ParamExpr P(long n, long d = 1) { return ParamExpr(Rational(n, d)); }
inline ParamExpr PX() { return pp("x"); }
inline ParamExpr PY() { return pp("y"); }
inline ParamExpr PK() { return pp("k"); }

inline PEVec v2(ParamExpr a, ParamExpr b) { return {a, b}; }
inline PEVec v3(ParamExpr a, ParamExpr b, ParamExpr c) { return {a, b, c}; }
inline PEVec v4(ParamExpr a, ParamExpr b, ParamExpr c, ParamExpr d) {
  return {a, b, c, d};
}

inline CompVec cv(PEVec base, ParamExpr h = ParamExpr(0)) {
  return CompVec{std::move(base), std::move(h)};
}
inline CompVec cvh(PEVec base, const char* free_const) {
  return CompVec{std::move(base), pp(free_const)};
}

inline WorksheetRow row(PEVec rep, std::vector<CompVec> comp, const char* flags,
                        int kappa, std::vector<std::string> forms,
                        std::vector<std::string> petrov = {},
                        std::vector<Cond> when = {}) {
  WorksheetRow r;
  r.rep = std::move(rep);
  r.complement = std::move(comp);
  std::string f = flags;
  r.f_reductive = f.find('R') != std::string::npos ||
                  f.find('S') != std::string::npos ||
                  f.find('I') != std::string::npos;
  r.f_symmetric = f.find('S') != std::string::npos;
  r.f_ideal = f.find('I') != std::string::npos;
  r.kappa = kappa;
  r.forms = std::move(forms);
  r.petrov = std::move(petrov);
  r.when = std::move(when);
  return r;
}

using GenFn = std::function<SVec(const Scalar&, const SVec&, const Params&)>;

inline AutoGen gen(const std::string& name, GenKind kind, GenFn fn) {
  return AutoGen{name, kind, std::move(fn)};
}

// The projective line scaling v -> v/t; shared by every worksheet.
inline AutoGen lambda_gen() {
  return gen("lambda", GenKind::Lambda,
             [](const Scalar& t, const SVec& v, const Params&) {
               SVec out;
               out.reserve(v.size());
               for (const auto& x : v) out.push_back(x / t);
               return out;
             });
}

using ParamFn = std::function<Scalar(const QVec&, const Params&)>;
using GuardFn = std::function<bool(const QVec&, const Params&)>;
using TargetFn = std::function<QVec(const QVec&, const Params&)>;

inline PipelineStep step(const std::string& g, ParamFn f) {
  return PipelineStep{g, std::move(f)};
}

inline CanonicalCase cse(const std::string& id, GuardFn guard,
                         std::vector<PipelineStep> steps, TargetFn target) {
  CanonicalCase c;
  c.id = id;
  c.guard = std::move(guard);
  c.steps = std::move(steps);
  c.target = std::move(target);
  return c;
}

inline Worksheet& ws(Catalog& cat, const std::string& key) {
  cat.worksheets.push_back(Worksheet{});
  cat.worksheets.back().key = key;
  return cat.worksheets.back();
}

}  // namespace catalog_detail
}  // namespace petrov

#endif
