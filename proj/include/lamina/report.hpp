#pragma once

// Run reports (JSON, lossless) and the fixed-precision result tables (CSV).
//
// CSV formatting: xi and nu with 4 decimals, angles in degrees with 1 decimal.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lamina/auxetic.hpp"

namespace lamina {

inline constexpr const char* kToolVersion = "lamina 0.1.0";

using RunResult = std::variant<FeasibilityResult, MinNuResult, MaxZoneResult>;

struct RunReport {
    std::string command;
    std::string material_id;
    std::string material_name;
    RunResult result;
    std::vector<std::string> warnings;
    std::string tool_version = kToolVersion;
    std::string timestamp;
};

/// UTC ISO-8601; honours SOURCE_DATE_EPOCH for reproducible output.
std::string current_timestamp();

nlohmann::json to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

bool operator==(const AuxeticZone& a, const AuxeticZone& b);
bool operator==(const FeasibilityResult& a, const FeasibilityResult& b);
bool operator==(const MinNuResult& a, const MinNuResult& b);
bool operator==(const MaxZoneResult& a, const MaxZoneResult& b);
bool operator==(const RunReport& a, const RunReport& b);

/// Fixed-point text with negative zero folded to zero.
std::string fixed(double value, int decimals);
double degrees(double radians);
double radians(double degrees);

std::string csv_field(const std::string& text);

inline constexpr const char* kMinNuHeader = "id,name,nu12_min,theta_deg,xi3,xi1,delta_deg";
inline constexpr const char* kMaxZoneHeader =
    "id,name,xi3_opt,xi1_opt,theta1_deg,theta2_deg,dtheta_deg,delta_deg,nu12_min,theta_min_deg,"
    "clamped";

std::string min_nu_row(const std::string& id, const std::string& name, const MinNuResult& r);
std::string max_zone_row(const std::string& id, const std::string& name, const MaxZoneResult& r);

}  // namespace lamina
