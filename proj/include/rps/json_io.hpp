#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "rps/classifier.hpp"
#include "rps/mass_function.hpp"
#include "rps/reliability.hpp"
#include "rps/rps.hpp"

namespace rps {

using Json = nlohmann::ordered_json;

// {"frame": [...], "masses": [{"focal": [...], "mass": x}, ...]}
Json to_json(const MassFunction& m);
MassFunction mass_function_from_json(const Json& j);

// {"frame": [...], "pmf": [{"event": [...], "mass": x}, ...]}; event arrays
// are order-significant.
Json to_json(const RandomPermutationSet& mu);
RandomPermutationSet rps_from_json(const Json& j);

Json to_json(const ProbabilityDistribution& p);

// {"dc": [...], "reliability": [...], "fusion_order": [...]}
Json to_json(const ReliabilityReport& report);
ReliabilityReport reliability_report_from_json(const Json& j);

Json to_json(const AccuracyReport& report);
AccuracyReport accuracy_report_from_json(const Json& j);

/// Pretty-printed JSON. Doubles use the shortest representation that
/// parses back to the same value, so round trips are lossless.
std::string dump(const Json& j);

/// Throws ParseError on malformed JSON.
Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);

/// Refuses to replace an existing file unless `force` is set. Throws
/// Error when the path is unwritable.
void write_text_file(const std::filesystem::path& path, const std::string& text, bool force);

void write_report(const AccuracyReport& report, const std::filesystem::path& path, bool force = false);
void write_report(const ReliabilityReport& report, const std::filesystem::path& path, bool force = false);
AccuracyReport read_accuracy_report(const std::filesystem::path& path);
ReliabilityReport read_reliability_report(const std::filesystem::path& path);

}  // namespace rps
