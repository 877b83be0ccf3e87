#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lft/estimator.hpp"
#include "lft/transducer.hpp"

namespace lft {

/// Reads {"l":..,"m":..,"n":..,"A":[rows],"B":[rows],"C":[rows],"D":[rows]}
/// with rows as 0/1 strings. The l, m and n fields are optional but must match
/// the matrices when present. Throws std::invalid_argument (or ShapeError) on
/// malformed input.
Lft lft_from_json(const nlohmann::json& j);
nlohmann::json lft_to_json(const Lft& t);

/// Parses a UTF-8 file in the format above.
Lft load_lft(const std::filesystem::path& path);

/// All fields; rationals as "num/den" strings, big integers as decimal strings.
nlohmann::json report_to_json(const EstimateReport& r);

std::string report_csv_header();
std::string report_to_csv(const EstimateReport& r);

nlohmann::json census_to_json(const CensusReport& c);

}  // namespace lft
