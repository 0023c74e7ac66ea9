#include "tables.hpp"

#include <algorithm>
#include <sstream>

#include "canonical.hpp"
#include "classify.hpp"

namespace petrov {

namespace {

std::string flags_str(const ComplementType& t) {
  std::string s;
  if (t.symmetric) s += "S";
  if (t.ideal) s += s.empty() ? "I" : ",I";
  return s;
}

std::vector<std::string> summary_header() {
  return {"Petrov", "Class", "h0", "Comp", "Iso"};
}

Table golden_summary(const Catalog&, const std::vector<SummaryRowG>& rows,
                     const std::string& name) {
  Table t;
  t.name = name;
  t.header = summary_header();
  for (const auto& r : rows)
    t.rows.push_back({r.petrov, r.algebra_display, r.h0_display, r.comp_flags,
                      r.iso});
  return t;
}

Table regen_summary(const Catalog& cat, const std::vector<SummaryRowG>& rows,
                    const std::string& name, std::uint64_t seed) {
  Table t;
  t.name = name;
  t.header = summary_header();
  for (const auto& r : rows) {
    if (r.algebra_key.empty()) {
      // No isotropy data is asserted (the non-transitive case); the class
      // cell still comes from the recorded action identification.
      std::string cls = r.algebra_display;
      if (const PetrovAction* a = cat.action(r.petrov))
        cls = a->corrected.winternitz_key;
      t.rows.push_back({r.petrov, cls, r.h0_display, r.comp_flags, r.iso});
      continue;
    }
    LieAlgebra g = cat.get(r.algebra_key, r.sample_params);
    auto rep = classify_pair(cat, g, SubalgebraLine{r.h0},
                             Complement{r.complement}, seed);
    auto ids = petrov_identify(cat, g.key, g.params, rep.iso,
                               rep.ctype.symmetric, rep.ctype.ideal);
    std::string id;
    if (std::find(ids.begin(), ids.end(), r.petrov) != ids.end())
      id = r.petrov;
    else if (!ids.empty())
      id = ids.front();
    t.rows.push_back({id, r.algebra_display, r.h0_display, flags_str(rep.ctype),
                      iso_letter(rep.iso)});
  }
  return t;
}

}  // namespace

Table golden_summary_g3(const Catalog& cat) {
  return golden_summary(cat, cat.summary_g3, "classification-summary-g3");
}
Table golden_summary_g4(const Catalog& cat) {
  return golden_summary(cat, cat.summary_g4, "classification-summary-g4");
}
Table regen_summary_g3(const Catalog& cat, std::uint64_t seed) {
  return regen_summary(cat, cat.summary_g3, "classification-summary-g3", seed);
}
Table regen_summary_g4(const Catalog& cat, std::uint64_t seed) {
  return regen_summary(cat, cat.summary_g4, "classification-summary-g4", seed);
}

Table golden_metrics(const Catalog& cat) {
  Table t;
  t.name = "invariant-metrics-summary";
  t.header = {"Algebra", "Isotropy", "Complement", "Com", "Iso", "Petrov"};
  for (const auto& r : cat.metrics_summary)
    t.rows.push_back({r.algebra_display, r.h0_display, r.complement_display,
                      r.comp_flags, r.iso, r.petrov});
  return t;
}

Table regen_metrics(const Catalog& cat, std::uint64_t seed) {
  Table t;
  t.name = "invariant-metrics-summary";
  t.header = {"Algebra", "Isotropy", "Complement", "Com", "Iso", "Petrov"};
  for (const auto& r : cat.metrics_summary) {
    LieAlgebra g = cat.get(r.algebra_key, r.sample_params);
    auto rep = classify_pair(cat, g, SubalgebraLine{r.rep},
                             Complement{r.complement}, seed);
    auto ids = petrov_identify(cat, g.key, g.params, rep.iso,
                               rep.ctype.symmetric, rep.ctype.ideal);
    std::string id;
    bool lorentz_ok = rep.effective && rep.adm.lorentz.has_value();
    // 2-D quotients also admit definite metrics; the table lists those too.
    if (g.dim == 3)
      lorentz_ok = rep.effective &&
                   (rep.adm.lorentz.has_value() || rep.adm.riemannian.has_value());
    if (lorentz_ok) {
      if (std::find(ids.begin(), ids.end(), r.petrov) != ids.end())
        id = r.petrov;
      else if (!ids.empty())
        id = ids.front();
    }
    t.rows.push_back({r.algebra_display, r.h0_display, r.complement_display,
                      flags_str(rep.ctype), iso_letter(rep.iso), id});
  }
  return t;
}

Table golden_reductions(const Catalog& cat) {
  Table t;
  t.name = "g4-g3-reductions";
  t.header = {"Algebra4", "Component3", "Isotropy", "G4", "G3"};
  for (const auto& r : cat.reductions) {
    std::ostringstream iso;
    iso << "[";
    for (size_t i = 0; i < r.h0.size(); ++i) {
      if (i) iso << ",";
      iso << rat_to_string(r.h0[i]);
    }
    iso << "]";
    t.rows.push_back({r.g4_key, r.g3_key, iso.str(), r.g4_petrov, r.g3_petrov});
  }
  return t;
}

Table regen_reductions(const Catalog& cat, std::uint64_t seed) {
  Table t;
  t.name = "g4-g3-reductions";
  t.header = {"Algebra4", "Component3", "Isotropy", "G4", "G3"};
  for (const auto& r : cat.reductions) {
    LieAlgebra g4 = cat.get(r.g4_key, r.g4_params);
    auto red = reduce_decomposable(cat, r.g4_key, r.g4_params,
                                   SubalgebraLine{r.h0});
    std::string comp3 = "-", g3id = "-", g4id = "-";
    std::ostringstream iso;
    iso << "[";
    for (size_t i = 0; i < r.h0.size(); ++i) {
      if (i) iso << ",";
      iso << rat_to_string(r.h0[i]);
    }
    iso << "]";
    auto rep4 =
        classify_pair(cat, g4, SubalgebraLine{r.h0}, std::nullopt, seed);
    if (rep4.petrov) g4id = *rep4.petrov;
    if (red) {
      comp3 = red->g3_key;
      LieAlgebra g3 = cat.get(red->g3_key, red->g3_params);
      auto rep3 =
          classify_pair(cat, g3, SubalgebraLine{red->h0}, std::nullopt, seed);
      if (rep3.petrov) g3id = *rep3.petrov;
      if (!(rep3.iso == rep4.iso)) g3id += " (isotropy mismatch)";
    }
    t.rows.push_back({r.g4_key, comp3, iso.str(), g4id, g3id});
  }
  return t;
}

std::vector<CellDiff> diff_tables(const Table& golden, const Table& regen) {
  std::vector<CellDiff> out;
  size_t rows = std::max(golden.rows.size(), regen.rows.size());
  for (size_t i = 0; i < rows; ++i) {
    if (i >= golden.rows.size() || i >= regen.rows.size()) {
      CellDiff d;
      d.table = golden.name;
      d.row = static_cast<int>(i);
      d.column = "(row)";
      d.expected = i < golden.rows.size() ? "present" : "absent";
      d.actual = i < regen.rows.size() ? "present" : "absent";
      out.push_back(d);
      continue;
    }
    for (size_t c = 0; c < golden.header.size(); ++c) {
      if (golden.rows[i][c] == regen.rows[i][c]) continue;
      CellDiff d;
      d.table = golden.name;
      d.row = static_cast<int>(i);
      d.column = golden.header[c];
      d.expected = golden.rows[i][c];
      d.actual = regen.rows[i][c];
      out.push_back(d);
    }
  }
  return out;
}

std::string render_markdown(const Table& t) {
  std::ostringstream os;
  os << "| ";
  for (const auto& h : t.header) os << h << " | ";
  os << "\n|";
  for (size_t i = 0; i < t.header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& row : t.rows) {
    os << "| ";
    for (const auto& cell : row) os << cell << " | ";
    os << "\n";
  }
  return os.str();
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto esc = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
    return out;
  };
  for (size_t i = 0; i < t.header.size(); ++i)
    os << (i ? "," : "") << esc(t.header[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << esc(row[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace petrov
