#include "canonical.hpp"

#include <stdexcept>

namespace petrov {

SVec apply_generator(const AutoGen& gen, const Scalar& t, const SVec& v,
                     const Params& p) {
  if (gen.kind != GenKind::Inner && gen.kind != GenKind::Outer && t.is_zero())
    throw std::domain_error("scaling generator requires t != 0");
  return gen.apply(t, v, p);
}

bool check_automorphism(const LieAlgebra& g, const AutoGen& gen,
                        const Scalar& t) {
  int n = g.dim;
  auto phi = [&](const QVec& u) {
    return apply_generator(gen, t, to_svec(u), g.params);
  };
  std::vector<SVec> images;
  for (int i = 0; i < n; ++i) images.push_back(phi(unit_vec(n, i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // [phi(e_i), phi(e_j)] via bilinear expansion over the images.
      SVec lhs(n, Scalar(0));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          Scalar f = images[i][a] * images[j][b];
          if (f.is_zero()) continue;
          for (int k = 0; k < n; ++k)
            if (!g.c[a][b][k].is_zero()) lhs[k] += f * Scalar(g.c[a][b][k]);
        }
      // phi([e_i, e_j]).
      QVec br = g.bracket(unit_vec(n, i), unit_vec(n, j));
      SVec rhs = phi(br);
      if (!svec_eq(lhs, rhs)) return false;
    }
  return true;
}

namespace {

const Worksheet& worksheet_for(const Catalog& cat, const std::string& key,
                               const Params& params, Params& full) {
  auto [entry, p] = cat.resolve(key, params);
  full = p;
  const Worksheet* w = cat.find_worksheet(entry->key);
  if (!w) throw std::invalid_argument("no worksheet for " + entry->key);
  return *w;
}

const AutoGen& find_gen(const Worksheet& w, const std::string& name) {
  for (const auto& g : w.gens)
    if (g.name == name) return g;
  throw std::logic_error("unknown generator " + name + " in worksheet " + w.key);
}

}  // namespace

std::map<std::string, Scalar> adjoint_invariants(const Catalog& cat,
                                                 const std::string& key,
                                                 const Params& params,
                                                 const QVec& v) {
  Params full;
  const Worksheet& w = worksheet_for(cat, key, params, full);
  std::map<std::string, Scalar> out;
  for (const auto& inv : w.invariants) out.emplace(inv.name, inv.eval(to_svec(v), full));
  return out;
}

CanonicalResult canonicalize(const Catalog& cat, const std::string& key,
                             const Params& params, const QVec& v) {
  bool nonzero = false;
  for (const auto& x : v)
    if (!x.is_zero()) nonzero = true;
  if (!nonzero) throw std::invalid_argument("vector must be nonzero");

  Params full;
  const Worksheet& w = worksheet_for(cat, key, params, full);
  for (const auto& cs : w.cases) {
    if (!cs.guard(v, full)) continue;
    CanonicalResult res;
    res.case_id = cs.id;
    res.representative = cs.target(v, full);
    SVec cur = to_svec(v);
    for (const auto& step : cs.steps) {
      const AutoGen& gen = find_gen(w, step.gen);
      Scalar t = step.param(v, full);
      cur = apply_generator(gen, t, cur, full);
      TranscriptStep ts;
      ts.gen = step.gen;
      ts.param = t;
      ts.exact = t.is_exact();
      res.transcript.push_back(std::move(ts));
    }
    res.transformed = cur;
    res.exact = true;
    for (const auto& s : cur)
      if (!s.is_exact()) res.exact = false;
    return res;
  }
  throw std::domain_error("no canonicalization case matches (transcription gap)");
}

QVec row_rep(const WorksheetRow& row, const Params& params,
             const std::optional<Rational>& family_value) {
  Params p = params;
  if (row.family_param) {
    if (!family_value)
      throw std::invalid_argument("row needs a family parameter value");
    p[*row.family_param] = *family_value;
  }
  return eval_pe_vec(row.rep, p);
}

Complement row_complement(const WorksheetRow& row, const Params& params,
                          const QVec& rep) {
  Complement m;
  for (const auto& cv : row.complement) {
    Params p = params;
    for (const char* free : {"c", "c1", "c2", "c3"}) p[free] = 0;
    QVec base = eval_pe_vec(cv.base, p);
    Rational hc = cv.h_coef.eval(p);
    if (!hc.is_zero())
      for (size_t i = 0; i < base.size(); ++i) base[i] += hc * rep[i];
    m.vectors.push_back(std::move(base));
  }
  return m;
}

std::vector<Rational> family_samples(const WorksheetRow& row) {
  std::vector<Rational> out;
  for (long k : {1L, 2L, -2L}) {
    Rational q(k);
    bool excluded = false;
    for (const auto& e : row.family_excluded)
      if (e == q) excluded = true;
    if (!excluded) out.push_back(q);
  }
  return out;
}

std::vector<EnumeratedSubalgebra> enumerate_subalgebras(const Catalog& cat,
                                                        const std::string& key,
                                                        const Params& params,
                                                        std::uint64_t seed) {
  auto [entry, full] = cat.resolve(key, params);
  LieAlgebra g = cat.instantiate(*entry, full);
  std::vector<EnumeratedSubalgebra> out;
  for (const WorksheetRow* row : cat.rows_for(key, params)) {
    std::vector<std::optional<Rational>> family_values;
    if (row->family_param)
      for (const auto& k : family_samples(*row)) family_values.push_back(k);
    else
      family_values.push_back(std::nullopt);
    for (const auto& fv : family_values) {
      Params p = full;
      if (fv && row->family_param) p[*row->family_param] = *fv;
      QVec rep = row_rep(*row, full, fv);
      Complement m = row_complement(*row, p, rep);
      EnumeratedSubalgebra item;
      item.representative = rep;
      item.family_value = fv;
      item.report = classify_pair(cat, g, SubalgebraLine{rep}, m, seed);
      out.push_back(std::move(item));
    }
  }
  return out;
}

std::vector<SymForm> resolve_form_names(const std::vector<std::string>& names,
                                        int side) {
  auto named = [&](const std::string& name) -> SymForm {
    int d = sym_space_dim(side);
    auto coord_form = [&](int k) {
      QVec c(d);
      c[k] = 1;
      return sym_from_coords(side, c);
    };
    if (side == 2) {
      if (name == "D1") return coord_form(0);
      if (name == "D2") return coord_form(1);
      if (name == "Q12") return coord_form(2);
      if (name == "R") return SymForm::diag({1, 1});
      if (name == "B") return SymForm::diag({1, -1});
    } else {
      if (name == "D1") return coord_form(0);
      if (name == "D2") return coord_form(1);
      if (name == "D3") return coord_form(2);
      if (name == "Q12") return coord_form(3);
      if (name == "Q13") return coord_form(4);
      if (name == "Q23") return coord_form(5);
      if (name == "R") return SymForm::diag({0, 1, 1});
      if (name == "B") return SymForm::diag({0, 1, -1});
      if (name == "N") {
        SymForm f(3);
        f.q.at(0, 2) = 1;
        f.q.at(2, 0) = 1;
        f.q.at(1, 1) = 1;
        return f;
      }
    }
    throw std::invalid_argument("unknown form name: " + name);
  };

  std::vector<SymForm> out;
  for (const auto& raw : names) {
    if (raw == "Z") continue;  // the zero form spans nothing
    if (raw == "Q") {
      int d = sym_space_dim(side);
      for (int k = 0; k < d; ++k) {
        QVec c(d);
        c[k] = 1;
        out.push_back(sym_from_coords(side, c));
      }
      continue;
    }
    // Composite names like "Q12+Q13".
    SymForm acc(side);
    std::string cur;
    std::vector<std::string> parts;
    for (char ch : raw) {
      if (ch == '+') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    for (const auto& part : parts) {
      SymForm f = named(part);
      for (size_t t = 0; t < acc.q.a.size(); ++t) acc.q.a[t] += f.q.a[t];
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace petrov
