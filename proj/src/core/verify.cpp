#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "canonical.hpp"
#include "classify.hpp"
#include "tables.hpp"
#include "vfield.hpp"

namespace petrov {

bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

// splitmix64; portable and stable across platforms.
RatSampler::RatSampler(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

std::uint64_t RatSampler::next_raw() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational RatSampler::next() {
  long num = static_cast<long>(next_raw() % 19) - 9;
  long den = static_cast<long>(next_raw() % 4) + 1;
  return Rational(num, den);
}

Rational RatSampler::next_bounded() {
  long num = static_cast<long>(next_raw() % 17) - 8;
  return Rational(num, 4);
}

QVec RatSampler::next_vec(int dim) {
  QVec v(dim);
  for (auto& x : v) x = next();
  return v;
}

QVec RatSampler::next_nonzero_vec(int dim) {
  for (;;) {
    QVec v = next_vec(dim);
    for (const auto& x : v)
      if (!x.is_zero()) return v;
  }
}

namespace {

using Task = std::pair<std::string, std::function<std::vector<CheckResult>()>>;

std::vector<CheckResult> run_tasks(std::vector<Task> tasks, int jobs) {
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i].second();
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        slots[i] = tasks[i].second();
      }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, static_cast<int>(tasks.size()));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<CheckResult> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

CheckResult check(const std::string& name, bool pass,
                  const std::string& detail = "") {
  return CheckResult{name, pass, detail};
}

std::string params_str(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ",";
    s += k + "=" + rat_to_string(v);
  }
  return s.empty() ? "" : "{" + s + "}";
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::vector<CheckResult> verify_jacobi(const Catalog& cat,
                                       const VerifyOptions& o) {
  std::vector<Task> tasks;
  for (const auto& e : cat.entries) {
    tasks.emplace_back(e.key, [&cat, &e]() {
      std::vector<CheckResult> out;
      for (const auto& s : e.samples) {
        LieAlgebra g = cat.instantiate(e, s);
        out.push_back(check("jacobi " + e.key + params_str(s),
                            g.jacobi_check()));
      }
      return out;
    });
  }
  return run_tasks(std::move(tasks), o.jobs);
}

std::vector<CheckResult> verify_automorphisms(const Catalog& cat,
                                              const VerifyOptions& o) {
  std::vector<Task> tasks;
  for (const auto& w : cat.worksheets) {
    tasks.emplace_back(w.key, [&cat, &w, o]() {
      std::vector<CheckResult> out;
      const CatalogEntry* e = cat.find_entry(w.key);
      if (!e) {
        out.push_back(check("automorphisms " + w.key, false, "missing entry"));
        return out;
      }
      for (const auto& sample : e->samples) {
        LieAlgebra g = cat.instantiate(*e, sample);
        for (const auto& gen : w.gens) {
          RatSampler rng(mix_seed(o.seed, w.key + "/" + gen.name));
          if (gen.kind == GenKind::Lambda) continue;
          bool ok = true;
          std::string detail;
          for (int t = 0; t < o.trials && ok; ++t) {
            Rational tr = rng.next_bounded();
            if (gen.kind != GenKind::Inner && gen.kind != GenKind::Outer &&
                tr.is_zero())
              tr = 1;
            if (!check_automorphism(g, gen, Scalar(tr))) {
              ok = false;
              detail = "fails at t=" + rat_to_string(tr);
            }
          }
          out.push_back(check("automorphism " + w.key + params_str(sample) +
                                  " " + gen.name,
                              ok, detail));
        }
      }
      return out;
    });
  }
  // The projective scaling must not be an automorphism on a nonabelian
  // bracket.
  tasks.emplace_back("lambda", [&cat]() {
    std::vector<CheckResult> out;
    const Worksheet* w = cat.find_worksheet("L(3,5)");
    if (!w) {
      out.push_back(check("lambda non-automorphism", false, "no L(3,5)"));
      return out;
    }
    const AutoGen* lambda = nullptr;
    for (const auto& gen : w->gens)
      if (gen.kind == GenKind::Lambda) lambda = &gen;
    if (!lambda) {
      out.push_back(check("lambda non-automorphism", false, "no lambda"));
      return out;
    }
    LieAlgebra g = cat.get("L(3,5)", {});
    out.push_back(check("lambda non-automorphism L(3,5)",
                        !check_automorphism(g, *lambda, Scalar(2))));
    return out;
  });
  return run_tasks(std::move(tasks), o.jobs);
}

std::vector<CheckResult> verify_adjoint_invariants(const Catalog& cat,
                                                   const VerifyOptions& o) {
  std::vector<Task> tasks;
  for (const auto& w : cat.worksheets) {
    if (w.invariants.empty()) continue;
    tasks.emplace_back(w.key, [&cat, &w, o]() {
      std::vector<CheckResult> out;
      const CatalogEntry* e = cat.find_entry(w.key);
      for (const auto& sample : e->samples) {
        LieAlgebra g = cat.instantiate(*e, sample);
        for (const auto& inv : w.invariants) {
          bool ok = true;
          std::string detail;
          for (const auto& gen : w.gens) {
            if (gen.kind != GenKind::Inner) continue;
            RatSampler rng(
                mix_seed(o.seed, w.key + "/" + inv.name + "/" + gen.name));
            for (int t = 0; t < o.trials && ok; ++t) {
              Rational tr = rng.next_bounded();
              QVec v = rng.next_vec(g.dim);
              Scalar before = inv.eval(to_svec(v), g.params);
              SVec latter = apply_generator(gen, Scalar(tr), to_svec(v), g.params);
              Scalar after = inv.eval(latter, g.params);
              if (!scalar_eq(before, after)) {
                ok = false;
                detail = inv.name + " moved under " + gen.name + " at t=" +
                         rat_to_string(tr);
              }
            }
          }
          out.push_back(check("adjoint-invariant " + w.key +
                                  params_str(sample) + " " + inv.name,
                              ok, detail));
        }
      }
      return out;
    });
  }
  return run_tasks(std::move(tasks), o.jobs);
}

namespace {

struct OrbitData {
  int kappa;
  Iso iso;
  size_t form_dim;
};

OrbitData orbit_data(const LieAlgebra& g, const QVec& v) {
  QMat M = quotient_matrix(g, SubalgebraLine{v});
  OrbitData d;
  d.kappa = static_cast<int>(nullspace(M).size());
  d.iso = isotropy_type(M).kind;
  d.form_dim = invariant_forms(M).size();
  return d;
}

}  // namespace

std::vector<CheckResult> verify_canonicalization(const Catalog& cat,
                                                 const VerifyOptions& o) {
  std::vector<Task> tasks;
  for (const auto& w : cat.worksheets) {
    if (w.cases.empty()) continue;
    tasks.emplace_back(w.key, [&cat, &w, o]() {
      std::vector<CheckResult> out;
      const CatalogEntry* e = cat.find_entry(w.key);
      for (const auto& sample : e->samples) {
        LieAlgebra g = cat.instantiate(*e, sample);
        RatSampler rng(mix_seed(o.seed, "canon/" + w.key + params_str(sample)));
        bool landing_ok = true, orbit_ok = true;
        std::string detail;
        for (int t = 0; t < o.vectors && landing_ok && orbit_ok; ++t) {
          QVec v = rng.next_nonzero_vec(g.dim);
          if (w.regular)
            while (!w.regular(v, sample)) v = rng.next_nonzero_vec(g.dim);
          CanonicalResult res;
          try {
            res = canonicalize(cat, w.key, sample, v);
          } catch (const std::exception& ex) {
            landing_ok = false;
            detail = std::string("no case: ") + ex.what();
            break;
          }
          if (!svec_eq(res.transformed, to_svec(res.representative))) {
            landing_ok = false;
            detail = "case " + res.case_id + " missed representative";
            break;
          }
          OrbitData a = orbit_data(g, v);
          OrbitData b = orbit_data(g, res.representative);
          if (a.kappa != b.kappa || a.iso != b.iso || a.form_dim != b.form_dim) {
            orbit_ok = false;
            detail = "orbit invariants changed in case " + res.case_id;
            break;
          }
        }
        out.push_back(check("canonicalize-landing " + w.key + params_str(sample),
                            landing_ok && orbit_ok, detail));
        // Representatives are fixed points of their own case.
        bool fixed_ok = true;
        std::string fdetail;
        for (const WorksheetRow* row : cat.rows_for(w.key, sample)) {
          std::vector<std::optional<Rational>> fvs;
          if (row->family_param)
            for (const auto& k : family_samples(*row)) fvs.push_back(k);
          else
            fvs.push_back(std::nullopt);
          for (const auto& fv : fvs) {
            QVec rep = row_rep(*row, sample, fv);
            auto res = canonicalize(cat, w.key, sample, rep);
            bool same = res.representative == rep &&
                        svec_eq(res.transformed, to_svec(rep));
            if (!same) {
              fixed_ok = false;
              std::ostringstream os;
              os << "rep [";
              for (size_t i = 0; i < rep.size(); ++i)
                os << (i ? "," : "") << rat_to_string(rep[i]);
              os << "] not fixed (case " << res.case_id << ")";
              fdetail = os.str();
            }
          }
        }
        out.push_back(check("canonicalize-fixed-points " + w.key +
                                params_str(sample),
                            fixed_ok, fdetail));
      }
      return out;
    });
  }
  return run_tasks(std::move(tasks), o.jobs);
}

namespace {

std::vector<CheckResult> check_worksheet_rows(const Catalog& cat,
                                              const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (const auto& w : cat.worksheets) {
    const CatalogEntry* e = cat.find_entry(w.key);
    if (!e) continue;
    for (const auto& sample : e->samples) {
      LieAlgebra g = cat.instantiate(*e, sample);
      int rowno = 0;
      for (const WorksheetRow* row : cat.rows_for(w.key, sample)) {
        ++rowno;
        std::string tag = w.key + params_str(sample) + " row" +
                          std::to_string(rowno);
        std::vector<std::optional<Rational>> fvs;
        if (row->family_param)
          for (const auto& k : family_samples(*row)) fvs.push_back(k);
        else
          fvs.push_back(std::nullopt);
        for (const auto& fv : fvs) {
          Params p = sample;
          if (fv && row->family_param) p[*row->family_param] = *fv;
          QVec rep = row_rep(*row, sample, fv);
          Complement m = row_complement(*row, p, rep);
          if (!is_basis_with(g, rep, m.vectors)) {
            out.push_back(check("worksheet " + tag, false, "not a basis"));
            continue;
          }
          auto rep_cls = classify_pair(cat, g, SubalgebraLine{rep}, m, o.seed);
          bool ok = true;
          std::string detail;
          // Every printed flag must be confirmed by computation; the tables
          // occasionally leave a holding property unmarked, so the converse
          // is not enforced here.
          if ((row->f_reductive && !rep_cls.ctype.reductive) ||
              (row->f_symmetric && !rep_cls.ctype.symmetric) ||
              (row->f_ideal && !rep_cls.ctype.ideal)) {
            ok = false;
            detail += "printed complement flag not confirmed; ";
          }
          if (rep_cls.kappa != row->kappa) {
            ok = false;
            detail += "kappa " + std::to_string(rep_cls.kappa) + " vs " +
                      std::to_string(row->kappa) + "; ";
          }
          auto listed = resolve_form_names(row->forms, g.dim - 1);
          if (listed.size() != rep_cls.forms.size()) {
            ok = false;
            detail += "form count differs; ";
          } else {
            std::vector<QVec> a, b;
            for (const auto& f : rep_cls.forms) a.push_back(sym_coords(f));
            for (const auto& f : listed) b.push_back(sym_coords(f));
            bool equal = subspace_equal(a, b);
            if (!row->congruence_only && !equal) {
              ok = false;
              detail += "form span differs literally; ";
            }
            if (row->congruence_only) {
              // Congruence-level agreement: admissibility outcomes match.
              auto adm_listed = admissibility(listed, o.seed);
              if (adm_listed.lorentz.has_value() !=
                      rep_cls.adm.lorentz.has_value() ||
                  adm_listed.riemannian.has_value() !=
                      rep_cls.adm.riemannian.has_value()) {
                ok = false;
                detail += "admissibility differs; ";
              }
            }
          }
          // Petrov column, when listed.
          if (!row->petrov.empty()) {
            auto ids = petrov_identify(cat, g.key, g.params, rep_cls.iso,
                                       rep_cls.ctype.symmetric,
                                       rep_cls.ctype.ideal);
            for (const auto& want : row->petrov)
              if (std::find(ids.begin(), ids.end(), want) == ids.end()) {
                ok = false;
                detail += "petrov id " + want + " not reproduced; ";
              }
          }
          out.push_back(check("worksheet " + tag, ok, detail));
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_petrov_key(const Catalog& cat) {
  std::vector<CheckResult> out;
  // Single valued: no two rows with the same key; injective: no id assigned
  // to two keys within one G-dimension.
  bool single = true, injective = true;
  std::string detail;
  for (size_t i = 0; i < cat.petrov_key.size(); ++i)
    for (size_t j = i + 1; j < cat.petrov_key.size(); ++j) {
      const auto& a = cat.petrov_key[i];
      const auto& b = cat.petrov_key[j];
      if (a.gdim == b.gdim && a.algebra_key == b.algebra_key &&
          a.iso == b.iso && a.symmetric == b.symmetric && a.ideal == b.ideal &&
          conds_str(a.regime) == conds_str(b.regime)) {
        single = false;
        detail += "duplicate key for " + a.algebra_key + "; ";
      }
      if (a.gdim == b.gdim)
        for (const auto& ia : a.ids)
          for (const auto& ib : b.ids)
            if (ia == ib && ia != "M") {
              injective = false;
              detail += "id " + ia + " assigned twice; ";
            }
    }
  out.push_back(check("petrov-key single-valued", single, detail));
  out.push_back(check("petrov-key injective", injective, detail));
  return out;
}

std::vector<CheckResult> check_lorentz_census(const Catalog& cat,
                                              const VerifyOptions& o) {
  std::vector<CheckResult> out;
  // Full enumeration over the catalog: effective pairs admitting a Lorentz
  // (dimension 3) or any nondegenerate (dimension 2) metric.
  int g4 = 0;
  int g3 = 0;
  std::set<std::string> seen;
  for (const auto& e : cat.entries) {
    if (e.dim < 3 || e.samples.empty()) continue;
    if (!cat.find_worksheet(e.key)) continue;
    const Params& sample = e.samples.front();
    for (const auto& item :
         enumerate_subalgebras(cat, e.key, sample, o.seed)) {
      const auto& r = item.report;
      bool admits = e.dim == 4 ? r.adm.lorentz.has_value()
                               : (r.adm.lorentz.has_value() ||
                                  r.adm.riemannian.has_value());
      if (!r.effective || !admits) continue;
      std::ostringstream tag;
      tag << e.key << ":";
      for (const auto& x : item.representative) tag << rat_to_string(x) << ",";
      if (!seen.insert(tag.str()).second) continue;
      if (e.dim == 4)
        ++g4;
      else
        ++g3;
    }
  }
  out.push_back(check("lorentz-census g4",
                      g4 == 20, "effective Lorentz pairs: " +
                                    std::to_string(g4) + " (want 20)"));
  out.push_back(check("lorentz-census g3", g3 == 5,
                      "effective metric pairs: " + std::to_string(g3) +
                          " (want 5)"));
  return out;
}

}  // namespace

std::vector<CheckResult> verify_tables(const Catalog& cat,
                                       const VerifyOptions& o,
                                       const std::string& suite) {
  std::vector<Task> tasks;
  auto add_diff = [&](const std::string& name, Table (*golden)(const Catalog&),
                      Table (*regen)(const Catalog&, std::uint64_t)) {
    tasks.emplace_back(name, [&cat, o, name, golden, regen]() {
      std::vector<CheckResult> out;
      auto diffs = diff_tables(golden(cat), regen(cat, o.seed));
      std::string detail;
      for (const auto& d : diffs)
        detail += "row " + std::to_string(d.row) + " col " + d.column +
                  ": expected '" + d.expected + "' got '" + d.actual + "'; ";
      out.push_back(check("table " + name, diffs.empty(), detail));
      return out;
    });
  };
  if (suite == "g3" || suite == "all")
    add_diff("classification-summary-g3", golden_summary_g3, regen_summary_g3);
  if (suite == "g4" || suite == "all")
    add_diff("classification-summary-g4", golden_summary_g4, regen_summary_g4);
  if (suite == "metrics" || suite == "all") {
    add_diff("invariant-metrics-summary", golden_metrics, regen_metrics);
    tasks.emplace_back("census", [&cat, o]() {
      return check_lorentz_census(cat, o);
    });
  }
  if (suite == "reductions" || suite == "all")
    add_diff("g4-g3-reductions", golden_reductions, regen_reductions);
  if (suite == "worksheets" || suite == "all")
    tasks.emplace_back("worksheets", [&cat, o]() {
      return check_worksheet_rows(cat, o);
    });
  if (suite == "key" || suite == "all")
    tasks.emplace_back("key", [&cat]() { return check_petrov_key(cat); });
  return run_tasks(std::move(tasks), o.jobs);
}

std::vector<CheckResult> verify_actions(const Catalog& cat,
                                        const VerifyOptions& o) {
  std::vector<Task> tasks;
  for (const auto& a : cat.actions) {
    tasks.emplace_back(a.id, [&cat, &a, o]() {
      std::vector<CheckResult> out;
      auto rep = verify_action(cat, a.id, "corrected", o.seed);
      bool ok = rep.closure_residual <= o.tol &&
                rep.identification_residual <= o.tol &&
                rep.isotropy_residual <= o.tol && rep.preferred_isotropy_ok;
      std::ostringstream detail;
      detail << "closure=" << rep.closure_residual
             << " ident=" << rep.identification_residual
             << " iso=" << rep.isotropy_residual
             << " preferred=" << (rep.preferred_isotropy_ok ? "ok" : "FAIL");
      out.push_back(check("action " + a.id, ok, detail.str()));
      if (a.typo) {
        auto trep = verify_action(cat, a.id, "typo", o.seed);
        bool fails_closure = trep.closure_residual > 1e-3;
        bool different_class =
            trep.closure_residual <= o.tol &&
            trep.identification_residual <= o.tol &&
            trep.identified_class != rep.identified_class;
        std::ostringstream tdetail;
        tdetail << "closure=" << trep.closure_residual << " class="
                << trep.identified_class;
        out.push_back(check("action-typo " + a.id,
                            fails_closure || different_class, tdetail.str()));
      }
      return out;
    });
  }
  return run_tasks(std::move(tasks), o.jobs);
}

std::vector<CheckResult> verify_all(const Catalog& cat, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  auto add = [&](std::vector<CheckResult> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  add(verify_jacobi(cat, o));
  add(verify_automorphisms(cat, o));
  add(verify_adjoint_invariants(cat, o));
  add(verify_canonicalization(cat, o));
  add(verify_tables(cat, o, "all"));
  add(verify_actions(cat, o));
  return out;
}

}  // namespace petrov
