#pragma once

#include <string>

#include "json.hpp"

#include "bohr/bohr_verify.hpp"
#include "bohr/circle.hpp"
#include "bohr/convexity.hpp"

namespace bohr {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const SweepSummary& s);
nlohmann::json to_json(const OracleSweepSummary& s);
nlohmann::json to_json(const Thm3Report& r);
nlohmann::json to_json(const ConvexityEstimate& e);
nlohmann::json to_json(const RadiusResult& r);
nlohmann::json to_json(const MuCheckReport& r);
nlohmann::json to_json(const SharpnessReport& r);

/// Wraps a payload with the schema version, the echoed command line, the
/// seed and the wall time.
nlohmann::json summary_envelope(const std::string& command, std::uint64_t seed,
                                double wall_time_s, nlohmann::json payload);

/// GroupFunction wire format: per element either an [re, im] pair (scalar)
/// or a d x d nested array of pairs, indexed by the element order of the
/// group table.
nlohmann::json group_function_to_json(const GroupFunction& f);
GroupFunction group_function_from_json(const nlohmann::json& j);

/// Writes through a temp file in the same directory and renames, so readers
/// never observe a partial report.
void write_text_atomic(const std::string& path, const std::string& content);

/// One CSV row: '.' decimal separator, no locale, '\n' terminated.
std::string csv_row(const std::vector<double>& values);

}  // namespace bohr
