#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lft {

enum class TableKind { kCountInjective, kPercentage };
enum class TableFormat { kMarkdown, kCsv, kJson };

TableKind parse_table_kind(const std::string& name);
TableFormat parse_table_format(const std::string& name);
std::string to_string(TableKind kind);

struct TableSpec {
  TableKind kind = TableKind::kCountInjective;
  std::vector<std::size_t> l_values;
  std::size_t m = 5;
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> taus;
  std::size_t samples = 20000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  bool include_trivial = false;

  /// Throws std::invalid_argument on empty ranges, zero dimensions or samples.
  void validate() const;
};

/// Seed of the (l, m, n) cell under a master seed. Every delay of one cell
/// shares the same sample, so `lft estimate --seed <cell_seed>` reproduces
/// any single cell.
std::uint64_t cell_seed(std::uint64_t master, std::size_t l, std::size_t m, std::size_t n);

struct TableCell {
  std::size_t l = 0;
  std::size_t n = 0;
  std::size_t tau = 0;
  std::uint64_t seed = 0;
  mpq_class value;  // class count or percentage
  std::string text;  // 3 significant digits or 2 decimals
};

struct TableResult {
  TableSpec spec;
  std::vector<TableCell> cells;  // ordered by l, n, tau
  double wall_seconds = 0.0;
};

TableResult compute_table(const TableSpec& spec);

void render_table(const TableResult& result, TableFormat format, std::ostream& out);

}  // namespace lft
