#include "lft/table.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "lft/decimal.hpp"
#include "lft/estimator.hpp"

namespace lft {

TableKind parse_table_kind(const std::string& name) {
  if (name == "count-injective") return TableKind::kCountInjective;
  if (name == "percentage") return TableKind::kPercentage;
  throw std::invalid_argument("unknown table \"" + name + "\" (count-injective or percentage)");
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "md") return TableFormat::kMarkdown;
  if (name == "csv") return TableFormat::kCsv;
  if (name == "json") return TableFormat::kJson;
  throw std::invalid_argument("unknown format \"" + name + "\" (md, csv or json)");
}

std::string to_string(TableKind kind) {
  return kind == TableKind::kCountInjective ? "count-injective" : "percentage";
}

void TableSpec::validate() const {
  if (l_values.empty() || n_values.empty() || taus.empty()) {
    throw std::invalid_argument("table ranges must be nonempty");
  }
  if (l_values.front() == 0 || n_values.front() == 0 || m == 0) {
    throw std::invalid_argument("l, m and n must be positive");
  }
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
}

std::uint64_t cell_seed(std::uint64_t master, std::size_t l, std::size_t m, std::size_t n) {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t v : {std::uint64_t{l}, std::uint64_t{m}, std::uint64_t{n}}) {
    h = splitmix64(h ^ v);
  }
  return h;
}

TableResult compute_table(const TableSpec& spec) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  const bool pct = spec.kind == TableKind::kPercentage;
  TableResult result{spec, {}, 0.0};
  for (std::size_t l : spec.l_values) {
    for (std::size_t n : spec.n_values) {
      EstimateOptions opts;
      opts.l = l;
      opts.m = spec.m;
      opts.n = n;
      opts.samples = spec.samples;
      opts.seed = cell_seed(spec.seed, l, spec.m, n);
      opts.workers = spec.workers;
      opts.include_trivial = spec.include_trivial;
      for (const auto& rep : estimate_sweep(opts, spec.taus, pct)) {
        TableCell cell{l, n, rep.tau, opts.seed, pct ? *rep.percentage : rep.estimate, {}};
        cell.text = pct ? to_fixed(cell.value, 2) : to_scientific(cell.value, 3);
        result.cells.push_back(std::move(cell));
      }
    }
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

nlohmann::json metadata(const TableResult& r) {
  const auto& s = r.spec;
  return {{"table", to_string(s.kind)}, {"l", s.l_values},         {"m", s.m},
          {"n", s.n_values},            {"tau", s.taus},           {"samples", s.samples},
          {"seed", s.seed},             {"include_trivial", s.include_trivial},
          {"runtime_seconds", r.wall_seconds}};
}

// Grid with `rows` down and `cols` across; lookup(row, col) gives the cell text.
template <typename Lookup>
void markdown_grid(std::ostream& out, const std::string& corner,
                   const std::vector<std::size_t>& rows, const std::string& col_name,
                   const std::vector<std::size_t>& cols, Lookup lookup) {
  out << "| " << corner;
  for (auto c : cols) out << " | " << col_name << "=" << c;
  out << " |\n|---";
  for (std::size_t i = 0; i < cols.size(); ++i) out << "|---";
  out << "|\n";
  for (auto r : rows) {
    out << "| " << r;
    for (auto c : cols) out << " | " << lookup(r, c);
    out << " |\n";
  }
}

void render_markdown(const TableResult& r, std::ostream& out) {
  const auto& s = r.spec;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, const TableCell*> at;
  for (const auto& c : r.cells) at[{c.l, c.n, c.tau}] = &c;

  out << "<!-- table=" << to_string(s.kind) << " m=" << s.m << " l=" << join(s.l_values)
      << " n=" << join(s.n_values) << " tau=" << join(s.taus) << " samples=" << s.samples
      << " seed=" << s.seed << (s.include_trivial ? " include_trivial" : "") << " runtime="
      << std::fixed << std::setprecision(2) << r.wall_seconds << "s -->\n";
  out.unsetf(std::ios::floatfield);

  if (s.kind == TableKind::kCountInjective) {
    for (std::size_t tau : s.taus) {
      out << "\nm=" << s.m << ", tau=" << tau << "\n\n";
      markdown_grid(out, "n \\ l", s.n_values, "l", s.l_values,
                    [&](std::size_t n, std::size_t l) { return at.at({l, n, tau})->text; });
    }
  } else {
    for (std::size_t l : s.l_values) {
      out << "\nl=" << l << ", m=" << s.m << " (%)\n\n";
      markdown_grid(out, "n \\ tau", s.n_values, "tau", s.taus,
                    [&](std::size_t n, std::size_t tau) { return at.at({l, n, tau})->text; });
    }
  }
}

void render_csv(const TableResult& r, std::ostream& out) {
  const auto& s = r.spec;
  out << "# table=" << to_string(s.kind) << ",samples=" << s.samples << ",seed=" << s.seed
      << ",include_trivial=" << (s.include_trivial ? "true" : "false")
      << ",runtime_seconds=" << r.wall_seconds << "\n";
  out << "l,m,n,tau,cell_seed,value,rational\n";
  for (const auto& c : r.cells) {
    out << c.l << ',' << s.m << ',' << c.n << ',' << c.tau << ',' << c.seed << ',' << c.text
        << ',' << to_rational_string(c.value) << '\n';
  }
}

void render_json(const TableResult& r, std::ostream& out) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells) {
    cells.push_back({{"l", c.l},
                     {"m", r.spec.m},
                     {"n", c.n},
                     {"tau", c.tau},
                     {"cell_seed", c.seed},
                     {"value", c.text},
                     {"rational", to_rational_string(c.value)}});
  }
  out << nlohmann::json{{"meta", metadata(r)}, {"cells", cells}}.dump(2) << '\n';
}

}  // namespace

void render_table(const TableResult& result, TableFormat format, std::ostream& out) {
  switch (format) {
    case TableFormat::kMarkdown: render_markdown(result, out); break;
    case TableFormat::kCsv: render_csv(result, out); break;
    case TableFormat::kJson: render_json(result, out); break;
  }
}

}  // namespace lft
