#include "jsonio.hpp"

#include <cstdio>

namespace petrov {

std::string format_double(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

Json json_qvec(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

QVec qvec_from_json(const Json& j) {
  QVec v;
  for (const auto& x : j) v.push_back(rat_from_string(x.get<std::string>()));
  return v;
}

Json json_qmat(const QMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) rows.push_back(json_qvec(m.row(i)));
  return rows;
}

Json json_form(const SymForm& f) { return json_qmat(f.q); }

static Json json_params(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = rat_to_string(v);
  return j;
}

static Params params_from_json(const Json& j) {
  Params p;
  for (auto it = j.begin(); it != j.end(); ++it)
    p[it.key()] = rat_from_string(it.value().get<std::string>());
  return p;
}

Json json_report(const ClassificationReport& r) {
  Json j;
  j["algebra"] = r.algebra_key;
  j["params"] = json_params(r.params);
  j["h0"] = json_qvec(r.h0);
  Json comp = Json::array();
  for (const auto& v : r.complement) comp.push_back(json_qvec(v));
  j["complement"] = comp;
  j["complement_searched"] = r.complement_searched;
  j["kappa"] = r.kappa;
  j["action"] = json_qmat(r.action);
  j["complement_type"] = Json{{"reductive", r.ctype.reductive},
                              {"symmetric", r.ctype.symmetric},
                              {"ideal", r.ctype.ideal}};
  j["isotropy_type"] = iso_letter(r.iso);
  if (r.iso.kind == Iso::Unclassified) j["isotropy_detail"] = r.iso.detail;
  Json forms = Json::array();
  for (const auto& f : r.forms) forms.push_back(json_form(f));
  j["forms"] = forms;
  j["lorentz"] = r.adm.lorentz ? json_form(*r.adm.lorentz) : Json();
  j["riemannian"] = r.adm.riemannian ? json_form(*r.adm.riemannian) : Json();
  j["effective"] = r.effective;
  j["petrov"] = r.petrov ? Json(*r.petrov) : Json();
  j["seed"] = r.seed;
  return j;
}

Json json_action_report(const ActionReport& r) {
  Json j;
  j["id"] = r.id;
  j["variant"] = r.variant;
  j["closure_residual"] = format_double(r.closure_residual);
  j["identified_class"] = r.identified_class;
  j["identification_residual"] = format_double(r.identification_residual);
  j["isotropy_residual"] = format_double(r.isotropy_residual);
  j["preferred_isotropy_ok"] = r.preferred_isotropy_ok;
  return j;
}

Json json_canonical(const CanonicalResult& r) {
  Json j;
  j["case"] = r.case_id;
  j["representative"] = json_qvec(r.representative);
  j["exact"] = r.exact;
  Json steps = Json::array();
  for (const auto& s : r.transcript) {
    Json t;
    t["generator"] = s.gen;
    t["parameter"] = s.param.str();
    t["mode"] = s.exact ? "exact" : "approx";
    steps.push_back(t);
  }
  j["transcript"] = steps;
  Json tr = Json::array();
  for (const auto& s : r.transformed) tr.push_back(s.str());
  j["transformed"] = tr;
  return j;
}

// ---------------------------------------------------------------------------
// Catalog serialization

namespace {

Json json_pe(const ParamExpr& e) {
  Json j;
  j["const"] = rat_to_string(e.c0);
  if (!e.terms.empty()) {
    Json t = Json::object();
    for (const auto& [name, coef] : e.terms) t[name] = rat_to_string(coef);
    j["terms"] = t;
  }
  if (!e.den_terms.empty() || e.den_c0 != 1) {
    j["den_const"] = rat_to_string(e.den_c0);
    Json t = Json::object();
    for (const auto& [name, coef] : e.den_terms) t[name] = rat_to_string(coef);
    j["den_terms"] = t;
  }
  return j;
}

ParamExpr pe_from_json(const Json& j) {
  ParamExpr e;
  e.c0 = rat_from_string(j.at("const").get<std::string>());
  if (j.contains("terms"))
    for (auto it = j["terms"].begin(); it != j["terms"].end(); ++it)
      e.terms.emplace_back(it.key(),
                           rat_from_string(it.value().get<std::string>()));
  if (j.contains("den_const"))
    e.den_c0 = rat_from_string(j["den_const"].get<std::string>());
  if (j.contains("den_terms"))
    for (auto it = j["den_terms"].begin(); it != j["den_terms"].end(); ++it)
      e.den_terms.emplace_back(it.key(),
                               rat_from_string(it.value().get<std::string>()));
  return e;
}

Json json_pe_vec(const PEVec& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(json_pe(e));
  return a;
}

PEVec pe_vec_from_json(const Json& j) {
  PEVec v;
  for (const auto& e : j) v.push_back(pe_from_json(e));
  return v;
}

const char* op_name(Cond::Op op) {
  switch (op) {
    case Cond::Op::Eq: return "eq";
    case Cond::Op::Ne: return "ne";
    case Cond::Op::Lt: return "lt";
    case Cond::Op::Le: return "le";
    case Cond::Op::Gt: return "gt";
    case Cond::Op::Ge: return "ge";
  }
  return "eq";
}

Cond::Op op_from_name(const std::string& s) {
  if (s == "eq") return Cond::Op::Eq;
  if (s == "ne") return Cond::Op::Ne;
  if (s == "lt") return Cond::Op::Lt;
  if (s == "le") return Cond::Op::Le;
  if (s == "gt") return Cond::Op::Gt;
  if (s == "ge") return Cond::Op::Ge;
  throw std::invalid_argument("bad condition op: " + s);
}

Json json_cond(const Cond& c) {
  Json j;
  j["lhs"] = c.lhs;
  if (!c.lhs_plus.empty()) j["plus"] = c.lhs_plus;
  if (c.lhs_abs) j["abs"] = true;
  j["op"] = op_name(c.op);
  if (c.rhs_is_param)
    j["rhs_param"] = c.rhs_param;
  else
    j["rhs"] = rat_to_string(c.rhs_const);
  return j;
}

Cond cond_from_json(const Json& j) {
  Cond c;
  c.lhs = j.at("lhs").get<std::string>();
  c.lhs_plus = j.value("plus", std::string());
  c.lhs_abs = j.value("abs", false);
  c.op = op_from_name(j.at("op").get<std::string>());
  if (j.contains("rhs_param")) {
    c.rhs_is_param = true;
    c.rhs_param = j["rhs_param"].get<std::string>();
  } else {
    c.rhs_const = rat_from_string(j.at("rhs").get<std::string>());
  }
  return c;
}

Json json_conds(const std::vector<Cond>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(json_cond(c));
  return a;
}

std::vector<Cond> conds_from_json(const Json& j) {
  std::vector<Cond> cs;
  for (const auto& c : j) cs.push_back(cond_from_json(c));
  return cs;
}

Json json_doubles(const std::vector<double>& v) {
  Json a = Json::array();
  for (double d : v) a.push_back(d);
  return a;
}

std::vector<double> doubles_from_json(const Json& j) {
  std::vector<double> v;
  for (const auto& d : j) v.push_back(d.get<double>());
  return v;
}

}  // namespace

Json catalog_to_json(const Catalog& cat) {
  Json j;

  Json algebras = Json::array();
  for (const auto& e : cat.entries) {
    Json a;
    a["key"] = e.key;
    a["dim"] = e.dim;
    a["params"] = e.param_names;
    a["constraints"] = json_conds(e.constraints);
    Json brs = Json::array();
    for (const auto& b : e.brackets) {
      Json bj;
      bj["i"] = b.i + 1;
      bj["j"] = b.j + 1;
      bj["coeffs"] = json_pe_vec(b.coeffs);
      brs.push_back(bj);
    }
    a["brackets"] = brs;
    if (e.decomposition_key) a["decomposition"] = *e.decomposition_key;
    Json samples = Json::array();
    for (const auto& s : e.samples) samples.push_back(json_params(s));
    a["samples"] = samples;
    algebras.push_back(a);
  }
  j["algebras"] = algebras;

  Json worksheets = Json::array();
  for (const auto& w : cat.worksheets) {
    Json wj;
    wj["key"] = w.key;
    Json rows = Json::array();
    for (const auto& r : w.rows) {
      Json rj;
      rj["when"] = json_conds(r.when);
      rj["rep"] = json_pe_vec(r.rep);
      if (r.family_param) {
        Json f;
        f["param"] = *r.family_param;
        Json ex = Json::array();
        for (const auto& v : r.family_excluded) ex.push_back(rat_to_string(v));
        f["excluded"] = ex;
        rj["family"] = f;
      }
      Json comp = Json::array();
      for (const auto& cv : r.complement) {
        Json c;
        c["base"] = json_pe_vec(cv.base);
        c["h"] = json_pe(cv.h_coef);
        comp.push_back(c);
      }
      rj["complement"] = comp;
      std::string flags;
      if (r.f_reductive) flags += "R";
      if (r.f_symmetric) flags += "S";
      if (r.f_ideal) flags += "I";
      rj["flags"] = flags;
      rj["kappa"] = r.kappa;
      rj["forms"] = r.forms;
      if (r.congruence_only) rj["congruence_only"] = true;
      rj["petrov"] = r.petrov;
      rows.push_back(rj);
    }
    wj["rows"] = rows;
    worksheets.push_back(wj);
  }
  j["worksheets"] = worksheets;

  Json actions = Json::array();
  for (const auto& a : cat.actions) {
    Json aj;
    aj["id"] = a.id;
    aj["ambient"] = a.ambient;
    auto variant = [&](const ActionVariant& v) {
      Json vj;
      vj["class"] = v.winternitz_key;
      vj["params"] = json_params(v.winternitz_params_exact);
      Json ap = Json::object();
      for (const auto& [k, d] : v.winternitz_params_approx) ap[k] = d;
      vj["params_approx"] = ap;
      Json cb = Json::array();
      for (const auto& row : v.change_of_basis) cb.push_back(json_doubles(row));
      vj["change_of_basis"] = cb;
      return vj;
    };
    aj["corrected"] = variant(a.corrected);
    if (a.typo) aj["typo"] = variant(*a.typo);
    aj["has_preferred"] = a.has_preferred;
    if (a.has_preferred) {
      aj["x0"] = json_doubles(a.x0);
      aj["preferred_h0"] = json_doubles(a.preferred_h0);
    }
    Json box = Json::array();
    for (int k = 0; k < a.ambient; ++k)
      box.push_back(Json::array({a.box[k].first, a.box[k].second}));
    aj["box"] = box;
    actions.push_back(aj);
  }
  j["actions"] = actions;

  auto summary_json = [&](const std::vector<SummaryRowG>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
      Json rj;
      rj["petrov"] = r.petrov;
      rj["class_display"] = r.algebra_display;
      rj["class"] = r.algebra_key;
      rj["params"] = json_params(r.sample_params);
      rj["h0"] = json_qvec(r.h0);
      Json comp = Json::array();
      for (const auto& v : r.complement) comp.push_back(json_qvec(v));
      rj["complement"] = comp;
      rj["comp_flags"] = r.comp_flags;
      rj["iso"] = r.iso;
      rj["h0_display"] = r.h0_display;
      out.push_back(rj);
    }
    return out;
  };
  j["summary_g3"] = summary_json(cat.summary_g3);
  j["summary_g4"] = summary_json(cat.summary_g4);

  Json metrics = Json::array();
  for (const auto& r : cat.metrics_summary) {
    Json rj;
    rj["class_display"] = r.algebra_display;
    rj["class"] = r.algebra_key;
    rj["params"] = json_params(r.sample_params);
    rj["regime"] = json_conds(r.regime);
    rj["rep"] = json_qvec(r.rep);
    Json comp = Json::array();
    for (const auto& v : r.complement) comp.push_back(json_qvec(v));
    rj["complement"] = comp;
    rj["comp_flags"] = r.comp_flags;
    rj["iso"] = r.iso;
    rj["petrov"] = r.petrov;
    rj["h0_display"] = r.h0_display;
    rj["complement_display"] = r.complement_display;
    metrics.push_back(rj);
  }
  j["metrics_summary"] = metrics;

  Json reds = Json::array();
  for (const auto& r : cat.reductions) {
    Json rj;
    rj["g4"] = r.g4_key;
    rj["g4_params"] = json_params(r.g4_params);
    rj["g3"] = r.g3_key;
    rj["g3_params"] = json_params(r.g3_params);
    rj["h0"] = json_qvec(r.h0);
    rj["g4_petrov"] = r.g4_petrov;
    rj["g3_petrov"] = r.g3_petrov;
    reds.push_back(rj);
  }
  j["reductions"] = reds;

  Json key = Json::array();
  for (const auto& r : cat.petrov_key) {
    Json rj;
    rj["gdim"] = r.gdim;
    rj["class"] = r.algebra_key;
    rj["regime"] = json_conds(r.regime);
    rj["iso"] = std::string(1, r.iso);
    rj["symmetric"] = r.symmetric;
    rj["ideal"] = r.ideal;
    rj["ids"] = r.ids;
    key.push_back(rj);
  }
  j["petrov_key"] = key;

  Json eq = Json::array();
  for (const auto& [l, r] : cat.equivalences)
    eq.push_back(Json::array({l, r}));
  j["equivalences"] = eq;

  return j;
}

Catalog catalog_from_json(const Json& j) {
  Catalog cat = builtin_catalog();

  cat.entries.clear();
  for (const auto& a : j.at("algebras")) {
    CatalogEntry e;
    e.key = a.at("key").get<std::string>();
    e.dim = a.at("dim").get<int>();
    e.param_names = a.at("params").get<std::vector<std::string>>();
    e.constraints = conds_from_json(a.at("constraints"));
    for (const auto& bj : a.at("brackets")) {
      CatalogEntry::Bracket b;
      b.i = bj.at("i").get<int>() - 1;
      b.j = bj.at("j").get<int>() - 1;
      b.coeffs = pe_vec_from_json(bj.at("coeffs"));
      e.brackets.push_back(std::move(b));
    }
    if (a.contains("decomposition"))
      e.decomposition_key = a["decomposition"].get<std::string>();
    for (const auto& s : a.at("samples")) e.samples.push_back(params_from_json(s));
    cat.entries.push_back(std::move(e));
  }

  for (const auto& wj : j.at("worksheets")) {
    std::string key = wj.at("key").get<std::string>();
    Worksheet* w = nullptr;
    for (auto& cw : cat.worksheets)
      if (cw.key == key) w = &cw;
    if (!w) {
      cat.worksheets.push_back(Worksheet{});
      w = &cat.worksheets.back();
      w->key = key;
    }
    w->rows.clear();
    for (const auto& rj : wj.at("rows")) {
      WorksheetRow r;
      r.when = conds_from_json(rj.at("when"));
      r.rep = pe_vec_from_json(rj.at("rep"));
      if (rj.contains("family")) {
        r.family_param = rj["family"].at("param").get<std::string>();
        for (const auto& x : rj["family"].at("excluded"))
          r.family_excluded.push_back(rat_from_string(x.get<std::string>()));
      }
      for (const auto& c : rj.at("complement")) {
        CompVec cv;
        cv.base = pe_vec_from_json(c.at("base"));
        cv.h_coef = pe_from_json(c.at("h"));
        r.complement.push_back(std::move(cv));
      }
      std::string flags = rj.at("flags").get<std::string>();
      r.f_reductive = flags.find('R') != std::string::npos;
      r.f_symmetric = flags.find('S') != std::string::npos;
      r.f_ideal = flags.find('I') != std::string::npos;
      r.kappa = rj.at("kappa").get<int>();
      r.forms = rj.at("forms").get<std::vector<std::string>>();
      r.congruence_only = rj.value("congruence_only", false);
      r.petrov = rj.at("petrov").get<std::vector<std::string>>();
      w->rows.push_back(std::move(r));
    }
  }

  for (const auto& aj : j.at("actions")) {
    std::string id = aj.at("id").get<std::string>();
    PetrovAction* a = nullptr;
    for (auto& ca : cat.actions)
      if (ca.id == id) a = &ca;
    if (!a) continue;  // generator expressions are code; unknown ids dropped
    auto load_variant = [&](ActionVariant& v, const Json& vj) {
      v.winternitz_key = vj.at("class").get<std::string>();
      v.winternitz_params_exact = params_from_json(vj.at("params"));
      v.winternitz_params_approx.clear();
      for (auto it = vj.at("params_approx").begin();
           it != vj.at("params_approx").end(); ++it)
        v.winternitz_params_approx[it.key()] = it.value().get<double>();
      v.change_of_basis.clear();
      for (const auto& row : vj.at("change_of_basis"))
        v.change_of_basis.push_back(doubles_from_json(row));
    };
    load_variant(a->corrected, aj.at("corrected"));
    if (a->typo && aj.contains("typo")) load_variant(*a->typo, aj["typo"]);
    a->ambient = aj.at("ambient").get<int>();
    a->has_preferred = aj.at("has_preferred").get<bool>();
    if (a->has_preferred) {
      a->x0 = doubles_from_json(aj.at("x0"));
      a->preferred_h0 = doubles_from_json(aj.at("preferred_h0"));
    }
    const auto& box = aj.at("box");
    for (size_t k = 0; k < box.size() && k < 4; ++k)
      a->box[k] = {box[k][0].get<double>(), box[k][1].get<double>()};
  }

  auto load_summary = [&](std::vector<SummaryRowG>& rows, const Json& arr) {
    rows.clear();
    for (const auto& rj : arr) {
      SummaryRowG r;
      r.petrov = rj.at("petrov").get<std::string>();
      r.algebra_display = rj.at("class_display").get<std::string>();
      r.algebra_key = rj.at("class").get<std::string>();
      r.sample_params = params_from_json(rj.at("params"));
      r.h0 = qvec_from_json(rj.at("h0"));
      for (const auto& c : rj.at("complement")) r.complement.push_back(qvec_from_json(c));
      r.comp_flags = rj.at("comp_flags").get<std::string>();
      r.iso = rj.at("iso").get<std::string>();
      r.h0_display = rj.at("h0_display").get<std::string>();
      rows.push_back(std::move(r));
    }
  };
  load_summary(cat.summary_g3, j.at("summary_g3"));
  load_summary(cat.summary_g4, j.at("summary_g4"));

  cat.metrics_summary.clear();
  for (const auto& rj : j.at("metrics_summary")) {
    MetricsRow r;
    r.algebra_display = rj.at("class_display").get<std::string>();
    r.algebra_key = rj.at("class").get<std::string>();
    r.sample_params = params_from_json(rj.at("params"));
    r.regime = conds_from_json(rj.at("regime"));
    r.rep = qvec_from_json(rj.at("rep"));
    for (const auto& c : rj.at("complement")) r.complement.push_back(qvec_from_json(c));
    r.comp_flags = rj.at("comp_flags").get<std::string>();
    r.iso = rj.at("iso").get<std::string>();
    r.petrov = rj.at("petrov").get<std::string>();
    r.h0_display = rj.at("h0_display").get<std::string>();
    r.complement_display = rj.at("complement_display").get<std::string>();
    cat.metrics_summary.push_back(std::move(r));
  }

  cat.reductions.clear();
  for (const auto& rj : j.at("reductions")) {
    ReductionRow r;
    r.g4_key = rj.at("g4").get<std::string>();
    r.g4_params = params_from_json(rj.at("g4_params"));
    r.g3_key = rj.at("g3").get<std::string>();
    r.g3_params = params_from_json(rj.at("g3_params"));
    r.h0 = qvec_from_json(rj.at("h0"));
    r.g4_petrov = rj.at("g4_petrov").get<std::string>();
    r.g3_petrov = rj.at("g3_petrov").get<std::string>();
    cat.reductions.push_back(std::move(r));
  }

  cat.petrov_key.clear();
  for (const auto& rj : j.at("petrov_key")) {
    PetrovKeyRow r;
    r.gdim = rj.at("gdim").get<int>();
    r.algebra_key = rj.at("class").get<std::string>();
    r.regime = conds_from_json(rj.at("regime"));
    r.iso = rj.at("iso").get<std::string>()[0];
    r.symmetric = rj.at("symmetric").get<bool>();
    r.ideal = rj.at("ideal").get<bool>();
    r.ids = rj.at("ids").get<std::vector<std::string>>();
    cat.petrov_key.push_back(std::move(r));
  }

  cat.equivalences.clear();
  for (const auto& e : j.at("equivalences"))
    cat.equivalences.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());

  return cat;
}

}  // namespace petrov
