#ifndef PETROV_TABLES_HPP
#define PETROV_TABLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace petrov {

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct CellDiff {
  std::string table;
  int row = 0;
  std::string column;
  std::string expected;
  std::string actual;
};

// Golden renderings of the embedded tables.
Table golden_summary_g3(const Catalog& cat);
Table golden_summary_g4(const Catalog& cat);
Table golden_metrics(const Catalog& cat);
Table golden_reductions(const Catalog& cat);

// Recomputed renderings: every derivable cell comes from the classification
// pipeline run on the stored pair data.
Table regen_summary_g3(const Catalog& cat, std::uint64_t seed);
Table regen_summary_g4(const Catalog& cat, std::uint64_t seed);
Table regen_metrics(const Catalog& cat, std::uint64_t seed);
Table regen_reductions(const Catalog& cat, std::uint64_t seed);

std::vector<CellDiff> diff_tables(const Table& golden, const Table& regen);

std::string render_markdown(const Table& t);
std::string render_csv(const Table& t);

}  // namespace petrov

#endif
