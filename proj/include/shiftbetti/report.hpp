#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "shiftbetti/betti.hpp"
#include "shiftbetti/binomial.hpp"
#include "shiftbetti/family.hpp"

namespace shiftbetti {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// "(1, 6, 9, 4, 0)"
std::string pretty_totals(const std::vector<Int>& totals);

/// "j=22 -> (1, 6, 9, 4, 0)"
std::string pretty_row(Int j, const std::vector<Int>& totals);

inline constexpr const char* kScanCsvHeader =
    "j,g1,g2,g3,g4,content,b0,b1,b2,b3,b4,mu,ci";

std::string scan_csv(const FamilyScanReport& report);

Json betti_to_json(const GradedBettiTable& table);
GradedBettiTable betti_from_json(const Json& j);

Json scan_row_to_json(const ScanRow& row);
ScanRow scan_row_from_json(const Json& j);

Json scan_to_json(const FamilyScanReport& report);
FamilyScanReport scan_from_json(const Json& j);

Json binomial_to_json(const Binomial& b, std::optional<Int> degree = std::nullopt);
Json verification_to_json(const VerificationReport& report);

/// {"schema_version", "command", "parameters", "payload"[, "timing_ms"]}.
Json output_record(const std::string& command, Json parameters, Json payload,
                   std::optional<double> timing_ms = std::nullopt);

}  // namespace shiftbetti
