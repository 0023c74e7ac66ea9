#ifndef PETROV_CATALOG_HPP
#define PETROV_CATALOG_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"
#include "lie_algebra.hpp"
#include "scalar.hpp"

namespace petrov {

// ---------------------------------------------------------------------------
// Parameter expressions and constraints

// Ratio of affine expressions in named parameters:
// (c0 + sum coef_i p_i) / (den_c0 + sum den_coef_i p_i).
struct ParamExpr {
  Rational c0;
  std::vector<std::pair<std::string, Rational>> terms;
  Rational den_c0 = 1;
  std::vector<std::pair<std::string, Rational>> den_terms;

  ParamExpr() : c0(0) {}
  ParamExpr(long v) : c0(v) {}
  ParamExpr(const Rational& v) : c0(v) {}

  Rational eval(const Params& p) const;
  bool is_const() const { return terms.empty() && den_terms.empty(); }
  std::string str() const;
};

ParamExpr pp(const std::string& name, const Rational& coef = 1);
ParamExpr operator+(ParamExpr a, const ParamExpr& b);  // affine operands only
ParamExpr operator-(ParamExpr a, const ParamExpr& b);
ParamExpr operator*(const Rational& c, ParamExpr a);
ParamExpr operator-(const ParamExpr& a);
ParamExpr pe_over(ParamExpr num, const ParamExpr& den);

using PEVec = std::vector<ParamExpr>;
QVec eval_pe_vec(const PEVec& v, const Params& p);

// Atomic condition on parameters; a condition list is a conjunction.
struct Cond {
  enum class Op { Eq, Ne, Lt, Le, Gt, Ge };
  std::string lhs;        // parameter name
  std::string lhs_plus;   // optional second summand (compare lhs + lhs_plus)
  bool lhs_abs = false;   // compare |lhs|
  Op op = Op::Eq;
  bool rhs_is_param = false;
  Rational rhs_const;
  std::string rhs_param;

  bool eval(const Params& p) const;
  std::string str() const;
};

Cond c_eq(const std::string& p, const Rational& v);
Cond c_ne(const std::string& p, const Rational& v);
Cond c_lt(const std::string& p, const Rational& v);
Cond c_le(const std::string& p, const Rational& v);
Cond c_gt(const std::string& p, const Rational& v);
Cond c_ge(const std::string& p, const Rational& v);
Cond c_abs_le(const std::string& p, const Rational& v);
Cond c_le_pp(const std::string& p, const std::string& q);  // p <= q
Cond c_ne_pp(const std::string& p, const std::string& q);  // p != q
Cond c_sum_eq(const std::string& p, const std::string& q,
              const Rational& v);  // p + q = v
Cond c_sum_ne(const std::string& p, const std::string& q,
              const Rational& v);  // p + q != v

bool conds_hold(const std::vector<Cond>& cs, const Params& p);
std::string conds_str(const std::vector<Cond>& cs);

// ---------------------------------------------------------------------------
// Catalog entries (one per worksheet regime)

struct CatalogEntry {
  std::string key;  // e.g. "L(4,2,1,y)"
  int dim = 0;
  std::vector<std::string> param_names;
  std::vector<Cond> constraints;
  struct Bracket {
    int i, j;  // i < j
    PEVec coeffs;
  };
  std::vector<Bracket> brackets;
  // Key of the 3-D component when the algebra is (3-D) + abelian line in the
  // last coordinate; parameters carry over unchanged.
  std::optional<std::string> decomposition_key;
  // Parameter samples used by the verification suites (3 per regime).
  std::vector<Params> samples;
};

// ---------------------------------------------------------------------------
// Worksheet data

// One complement vector: base coefficients plus an optional free multiple of
// the subalgebra representative (the printed "+ c_i h" terms).
struct CompVec {
  PEVec base;
  ParamExpr h_coef;  // usually 0 or a free symbol c1..c3 (defaults to 0)
};

struct WorksheetRow {
  std::vector<Cond> when;  // regime conditions; empty = all parameters
  PEVec rep;               // may involve the family parameter "k"
  std::optional<std::string> family_param;
  std::vector<Rational> family_excluded;
  std::vector<CompVec> complement;
  bool f_reductive = false, f_symmetric = false, f_ideal = false;
  int kappa = 0;
  std::vector<std::string> forms;  // names from the quadratic-form notation
  // Set on rows whose printed basis is congruent (not equal) to the literal
  // invariant span.
  bool congruence_only = false;
  std::vector<std::string> petrov;  // normalized ids; "M" marks the omission
};

enum class GenKind { Inner, Outer, ScaleOne, ScaleTwo, ScalePair, Lambda };

struct AutoGen {
  std::string name;
  GenKind kind;
  std::function<SVec(const Scalar& t, const SVec& v, const Params& p)> apply;
};

struct AdjInvariant {
  std::string name;
  std::function<Scalar(const SVec& v, const Params& p)> eval;
};

struct PipelineStep {
  std::string gen;
  std::function<Scalar(const QVec& v, const Params& p)> param;
};

struct CanonicalCase {
  std::string id;
  std::function<bool(const QVec& v, const Params& p)> guard;
  std::vector<PipelineStep> steps;  // applied in order; lambda comes last
  std::function<QVec(const QVec& v, const Params& p)> target;
};

struct Worksheet {
  std::string key;
  std::vector<WorksheetRow> rows;
  std::vector<AutoGen> gens;
  std::vector<AdjInvariant> invariants;
  std::vector<CanonicalCase> cases;
  // The printed pipelines are generic-case formulas; property samplers reject
  // vectors on the singular sets of the formulas (null = none).
  std::function<bool(const QVec& v, const Params& p)> regular;
};

// ---------------------------------------------------------------------------
// Petrov group actions (vector-field realizations)

using VField = std::vector<Expr>;  // one component per ambient coordinate

struct ActionVariant {
  std::vector<VField> fields;
  std::string winternitz_key;
  Params winternitz_params_exact;                 // rational parameter values
  std::map<std::string, double> winternitz_params_approx;  // non-rational ones
  std::vector<std::vector<double>> change_of_basis;  // rows: e_i in X-basis
};

struct PetrovAction {
  std::string id;  // normalized, e.g. "32.03", "32.24(-)"
  int ambient = 0;
  ActionVariant corrected;
  std::optional<ActionVariant> typo;
  std::vector<Expr> generic_isotropy;  // coefficient of X_i as function of x
  bool has_preferred = true;           // 32.26 has none
  std::vector<double> x0;
  std::vector<double> preferred_h0;  // coefficients of the X_i
  std::array<std::pair<double, double>, 4> box{};
};

// ---------------------------------------------------------------------------
// Golden tables

struct SummaryRowG {  // classification summaries, G3 and G4
  std::string petrov;
  std::string algebra_display;
  std::string algebra_key;  // empty when no exact classification is asserted
  Params sample_params;
  QVec h0;
  std::vector<QVec> complement;
  std::string comp_flags;  // "S,I" | "S" | "I" | ""
  std::string iso;         // "R" | "B" | "N" | ""
  std::string h0_display;
};

struct MetricsRow {  // summary of invariant metrics
  std::string algebra_display;
  std::string algebra_key;
  Params sample_params;
  std::vector<Cond> regime;  // conditions selecting the worksheet row
  QVec rep;
  std::vector<QVec> complement;
  std::string comp_flags;
  std::string iso;
  std::string petrov;  // "M" for the omitted action
  std::string h0_display;
  std::string complement_display;
};

struct ReductionRow {
  std::string g4_key;
  Params g4_params;
  std::string g3_key;
  Params g3_params;
  QVec h0;  // inside the 3-D component of the 4-D algebra
  std::string g4_petrov;
  std::string g3_petrov;  // "M" allowed
};

struct PetrovKeyRow {
  int gdim = 4;  // 3 or 4
  std::string algebra_key;
  std::vector<Cond> regime;
  char iso = 'N';  // 'R' | 'B' | 'N'
  bool symmetric = false, ideal = false;
  std::vector<std::string> ids;  // primary id first (equivalent ids follow)
};

// ---------------------------------------------------------------------------
// The catalog

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<Worksheet> worksheets;
  std::vector<PetrovAction> actions;
  std::vector<SummaryRowG> summary_g3;
  std::vector<SummaryRowG> summary_g4;
  std::vector<MetricsRow> metrics_summary;
  std::vector<ReductionRow> reductions;
  std::vector<PetrovKeyRow> petrov_key;
  // Equivalent local group actions: right id resolves to the left one.
  std::vector<std::pair<std::string, std::string>> equivalences;

  const CatalogEntry* find_entry(const std::string& key) const;
  const Worksheet* find_worksheet(const std::string& key) const;
  const PetrovAction* find_action(const std::string& normalized_id) const;

  // Resolves a user-facing key like "L(3,2,-1)" or "L(4,2,x,y)" with params
  // to (entry, full parameter map). Throws std::invalid_argument on unknown
  // keys and std::domain_error on constraint violations.
  std::pair<const CatalogEntry*, Params> resolve(const std::string& key,
                                                 const Params& params) const;

  LieAlgebra instantiate(const CatalogEntry& e, const Params& p) const;
  LieAlgebra get(const std::string& key, const Params& params) const;

  // Worksheet rows whose regime matches the given parameters.
  std::vector<const WorksheetRow*> rows_for(const std::string& key,
                                            const Params& params) const;

  // Resolves equivalences and normalization, then finds the action. Typo
  // variants exist only where the corrections table records one.
  const PetrovAction* action(const std::string& id, bool* used_equiv = nullptr,
                             std::string* resolved = nullptr) const;
};

const Catalog& builtin_catalog();

// Petrov id normalization: "32.3" -> "32.03", "32.24 (-)" -> "32.24(-)".
std::string normalize_petrov_id(const std::string& id);

namespace catalog_detail {
void build_algebras(Catalog& c);
void build_worksheets_3d(Catalog& c);
void build_worksheets_4d(Catalog& c);
void build_actions(Catalog& c);
void build_goldens(Catalog& c);
}  // namespace catalog_detail

}  // namespace petrov

#endif
