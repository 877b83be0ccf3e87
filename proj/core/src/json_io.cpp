#include "lft/json_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "lft/decimal.hpp"

namespace lft {

namespace {

BitMatrix matrix_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  const auto& rows = j.at(key);
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument(std::string("field \"") + key + "\" must be a non-empty array");
  }
  std::vector<std::string> text;
  for (const auto& row : rows) {
    if (!row.is_string()) {
      throw std::invalid_argument(std::string("rows of \"") + key + "\" must be strings");
    }
    text.push_back(row.get<std::string>());
  }
  try {
    return BitMatrix::from_rows(text);
  } catch (const std::invalid_argument& e) {
    throw ShapeError(std::string(key) + ": " + e.what());
  }
}

void check_dim(const nlohmann::json& j, const char* key, std::size_t actual) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() != actual) {
    throw ShapeError(std::string("field \"") + key + "\" does not match the matrices (expected " +
                     std::to_string(actual) + ")");
  }
}

}  // namespace

Lft lft_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("LFT description must be a JSON object");
  Lft t(matrix_field(j, "A"), matrix_field(j, "B"), matrix_field(j, "C"), matrix_field(j, "D"));
  check_dim(j, "l", t.l());
  check_dim(j, "m", t.m());
  check_dim(j, "n", t.n());
  return t;
}

nlohmann::json lft_to_json(const Lft& t) {
  return {{"l", t.l()},           {"m", t.m()},           {"n", t.n()},
          {"A", t.a().to_rows()}, {"B", t.b().to_rows()}, {"C", t.c().to_rows()},
          {"D", t.d().to_rows()}};
}

Lft load_lft(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return lft_from_json(j);
}

nlohmann::json report_to_json(const EstimateReport& r) {
  nlohmann::json j = {
      {"l", r.l},
      {"m", r.m},
      {"n", r.n},
      {"q", r.q},
      {"tau", r.tau},
      {"samples", r.samples},
      {"seed", r.seed},
      {"estimate", to_rational_string(r.estimate)},
      {"estimate_decimal", r.estimate_decimal},
      {"include_trivial", r.include_trivial},
      {"injective_hits", r.injective_hits},
      {"wall_seconds", r.wall_seconds},
  };
  j["percentage"] = r.percentage_decimal ? nlohmann::json(*r.percentage_decimal) : nlohmann::json();
  j["percentage_rational"] =
      r.percentage ? nlohmann::json(to_rational_string(*r.percentage)) : nlohmann::json();
  j["total_classes"] = r.total_classes ? nlohmann::json(r.total_classes->get_str()) : nlohmann::json();
  return j;
}

std::string report_csv_header() {
  return "l,m,n,q,tau,samples,seed,estimate,estimate_decimal,percentage,total_classes,"
         "include_trivial,injective_hits,wall_seconds";
}

std::string report_to_csv(const EstimateReport& r) {
  std::ostringstream os;
  os << r.l << ',' << r.m << ',' << r.n << ',' << r.q << ',' << r.tau << ',' << r.samples << ','
     << r.seed << ',' << to_rational_string(r.estimate) << ',' << r.estimate_decimal << ','
     << r.percentage_decimal.value_or("") << ','
     << (r.total_classes ? r.total_classes->get_str() : std::string()) << ','
     << (r.include_trivial ? "true" : "false") << ',' << r.injective_hits << ','
     << r.wall_seconds;
  return os.str();
}

nlohmann::json census_to_json(const CensusReport& c) {
  nlohmann::json per_tau = nlohmann::json::array();
  for (std::size_t k = 0; k < c.taus.size(); ++k) {
    per_tau.push_back({
        {"tau", c.taus[k]},
        {"injective_classes", c.injective_total(k).get_str()},
        {"injective_nontrivial", c.injective_nontrivial[k].get_str()},
        {"injective_trivial", c.injective_trivial[k].get_str()},
        {"injective_weighted", to_rational_string(c.injective_weighted[k])},
        {"percentage", to_fixed(c.percentage(k), 4)},
        {"percentage_with_trivial", to_fixed(c.percentage(k, true), 4)},
    });
  }
  nlohmann::json by_size = nlohmann::json::array();
  for (const auto& v : c.canonical_by_size) by_size.push_back(v.get_str());
  return {
      {"l", c.l},
      {"m", c.m},
      {"n", c.n},
      {"enumerated", c.enumerated},
      {"classes",
       {{"total", mpz_class(c.nontrivial_classes + c.trivial_classes).get_str()},
        {"nontrivial", c.nontrivial_classes.get_str()},
        {"trivial", c.trivial_classes.get_str()},
        {"canonical_by_size", by_size}}},
      {"injective", per_tau},
  };
}

}  // namespace lft
