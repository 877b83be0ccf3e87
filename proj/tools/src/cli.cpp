#include "lft/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lft/census.hpp"
#include "lft/decimal.hpp"
#include "lft/estimator.hpp"
#include "lft/json_io.hpp"
#include "lft/ranges.hpp"
#include "lft/sample_size.hpp"
#include "lft/table.hpp"

namespace lft {

namespace {

using nlohmann::json;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("LFT_SEED");
  if (env == nullptr || *env == '\0') return 1;
  std::uint64_t v = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("LFT_SEED is not an unsigned 64-bit integer: " + std::string(s));
  }
  return v;
}

struct Dims {
  std::size_t l = 1;
  std::size_t m = 1;
  std::size_t n = 1;
};

void add_dims(CLI::App* cmd, Dims& d) {
  cmd->add_option("-l", d.l, "input dimension")->required()->check(CLI::PositiveNumber);
  cmd->add_option("-m", d.m, "output dimension")->required()->check(CLI::PositiveNumber);
  cmd->add_option("-n", d.n, "state dimension")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear finite transducers over F2: injectivity, class counts and estimates", "lft"};
  app.require_subcommand(1);

  // injective
  std::string file;
  std::size_t tau = 0;
  auto* injective = app.add_subcommand("injective", "decide injectivity with delay tau");
  injective->add_option("file", file, "LFT JSON file")->required();
  injective->add_option("--tau", tau, "delay")->required();

  // class-size
  auto* class_size_cmd = app.add_subcommand("class-size", "size of the equivalence class");
  class_size_cmd->add_option("file", file, "LFT JSON file")->required();

  // count-canonical
  Dims dims;
  unsigned long q = 2;
  bool cumulative = false;
  auto* count = app.add_subcommand("count-canonical", "number of canonical LFTs of size n");
  add_dims(count, dims);
  count->add_option("-q", q, "field size")->check(CLI::Range(2UL, 1UL << 20));
  count->add_flag("--cumulative", cumulative, "sum over sizes 1..n");

  // estimate
  std::size_t samples = 20000;
  std::size_t workers = 1;
  std::optional<std::uint64_t> seed_flag;
  bool percentage = false;
  bool include_trivial = false;
  std::string format = "json";
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of injective classes");
  add_dims(estimate, dims);
  estimate->add_option("--tau", tau, "delay")->required();
  estimate->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", seed_flag, "master seed (default $LFT_SEED, else 1)");
  estimate->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  estimate->add_flag("--percentage", percentage, "report a percentage of all classes");
  estimate->add_flag("--include-trivial", include_trivial,
                     "count trivial classes in the percentage denominator");
  estimate->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // table
  std::string table_name;
  std::string l_range = "1..5";
  std::string n_range = "1..10";
  std::string tau_range;
  std::size_t table_m = 5;
  std::string table_format = "md";
  auto* table = app.add_subcommand("table", "reproduce a grid of estimates");
  table->add_option("kind", table_name, "count-injective or percentage")
      ->required()
      ->check(CLI::IsMember({"count-injective", "percentage"}));
  table->add_option("-l", l_range, "input dimensions, e.g. 2 or 1..5");
  table->add_option("-m", table_m, "output dimension")->check(CLI::PositiveNumber);
  table->add_option("-n", n_range, "state dimensions, e.g. 1..10");
  table->add_option("--tau", tau_range, "delays (default 10 for counts, 0..10 for percentages)");
  table->add_option("--samples", samples, "samples per cell")->check(CLI::PositiveNumber);
  table->add_option("--seed", seed_flag, "master seed (default $LFT_SEED, else 1)");
  table->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  table->add_flag("--include-trivial", include_trivial,
                  "count trivial classes in the percentage denominator");
  table->add_option("--format", table_format, "md, csv or json")
      ->check(CLI::IsMember({"md", "csv", "json"}));

  // exact
  std::string tau_list = "0";
  std::size_t guard = kDefaultCensusGuardLog2;
  auto* exact = app.add_subcommand("exact", "exact census by exhaustive enumeration");
  add_dims(exact, dims);
  exact->add_option("--tau", tau_list, "delays, e.g. 0..3");
  exact->add_option("--guard", guard, "refuse more than 2^guard LFTs");
  exact->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  // random
  auto* random = app.add_subcommand("random", "uniformly random LFT as JSON");
  add_dims(random, dims);
  random->add_option("--seed", seed_flag, "seed (default $LFT_SEED, else 1)");

  // samples
  double confidence = 0.99;
  double margin = 0.01;
  bool exact_z = false;
  auto* samples_cmd = app.add_subcommand("samples", "sample size for a confidence level");
  samples_cmd->add_option("--confidence", confidence, "confidence level in (0, 1)");
  samples_cmd->add_option("--margin", margin, "margin of error in (0, 1)");
  samples_cmd->add_flag("--exact-z", exact_z, "use the unrounded normal quantile");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*injective) {
      const Lft t = load_lft(file);
      const auto delay = min_injectivity_delay(t);
      const bool ok = delay && *delay <= tau;
      out << json{{"injective", ok},
                  {"min_delay", delay ? json(*delay) : json()},
                  {"tau", tau}}
                 .dump()
          << '\n';
      return ok ? kExitOk : kExitNotInjective;
    }
    if (*class_size_cmd) {
      const Lft t = load_lft(file);
      out << json{{"rank_diagnostic", rank(diagnostic_matrix(t))},
                  {"class_size", class_size(t).get_str()}}
                 .dump()
          << '\n';
      return kExitOk;
    }
    if (*count) {
      const CountParams p{dims.l, dims.m, dims.n, q};
      const mpz_class v = cumulative ? total_classes(p, dims.n) : ct_canonical_count(p);
      out << json{{"l", dims.l}, {"m", dims.m},   {"n", dims.n},
                  {"q", q},      {"cumulative", cumulative}, {"count", v.get_str()}}
                 .dump()
          << '\n';
      return kExitOk;
    }
    if (*estimate) {
      EstimateOptions opts;
      opts.l = dims.l;
      opts.m = dims.m;
      opts.n = dims.n;
      opts.samples = samples;
      opts.seed = resolve_seed(seed_flag);
      opts.workers = workers;
      opts.include_trivial = include_trivial;
      const auto rep = percentage ? estimate_injective_percentage(opts, tau)
                                  : estimate_injective_classes(opts, tau);
      if (format == "csv") {
        out << report_csv_header() << '\n' << report_to_csv(rep) << '\n';
      } else {
        out << report_to_json(rep).dump(2) << '\n';
      }
      return kExitOk;
    }
    if (*table) {
      TableSpec spec;
      spec.kind = parse_table_kind(table_name);
      spec.l_values = parse_range(l_range);
      spec.m = table_m;
      spec.n_values = parse_range(n_range);
      if (tau_range.empty()) tau_range = spec.kind == TableKind::kPercentage ? "0..10" : "10";
      spec.taus = parse_range(tau_range);
      spec.samples = samples;
      spec.seed = resolve_seed(seed_flag);
      spec.workers = workers;
      spec.include_trivial = include_trivial;
      render_table(compute_table(spec), parse_table_format(table_format), out);
      return kExitOk;
    }
    if (*exact) {
      const auto report = exhaustive_census(dims.l, dims.m, dims.n, parse_range(tau_list), guard,
                                            workers);
      out << census_to_json(report).dump(2) << '\n';
      return kExitOk;
    }
    if (*random) {
      Rng rng(resolve_seed(seed_flag));
      out << lft_to_json(random_lft(dims.l, dims.m, dims.n, rng)).dump(2) << '\n';
      return kExitOk;
    }
    if (*samples_cmd) {
      const std::optional<int> decimals = exact_z ? std::nullopt : std::optional<int>(3);
      const std::size_t need = required_sample_size(confidence, margin, decimals);
      out << json{{"confidence", confidence},
                  {"margin", margin},
                  {"z", two_sided_z(confidence)},
                  {"z_rounded", !exact_z},
                  {"samples", need}}
                 .dump()
          << '\n';
      return kExitOk;
    }
  } catch (const EnumerationGuardError& e) {
    err << "lft: " << e.what() << '\n';
    return kExitGuardExceeded;
  } catch (const std::invalid_argument& e) {
    err << "lft: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "lft: " << e.what() << '\n';
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "lft: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace lft
