#include "lamina/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <numbers>

#include <fmt/format.h>

namespace lamina {

using nlohmann::json;

namespace {

json point_json(const LaminationPoint& p) { return {{"xi3", p.xi3}, {"xi1", p.xi1}}; }
LaminationPoint point_from(const json& j) { return {j.at("xi3").get<double>(), j.at("xi1").get<double>()}; }

json zone_json(const AuxeticZone& z) {
    return {{"theta1", z.theta1}, {"theta2", z.theta2}, {"width", z.width},
            {"empty", z.empty},   {"full", z.full},     {"axial", z.axial}};
}
AuxeticZone zone_from(const json& j) {
    AuxeticZone z;
    z.theta1 = j.at("theta1").get<double>();
    z.theta2 = j.at("theta2").get<double>();
    z.width = j.at("width").get<double>();
    z.empty = j.at("empty").get<bool>();
    z.full = j.at("full").get<bool>();
    z.axial = j.at("axial").get<bool>();
    return z;
}

json result_json(const FeasibilityResult& r) {
    json contours = json::array();
    for (const auto& line : r.xi_boundary) {
        json pts = json::array();
        for (const auto& p : line) pts.push_back(point_json(p));
        contours.push_back(std::move(pts));
    }
    return {{"type", "feasibility"}, {"feasible", r.feasible}, {"eta_min", r.eta_min},
            {"argmin", point_json(r.argmin)}, {"xi_boundary", std::move(contours)}};
}

json result_json(const MinNuResult& r) {
    return {{"type", "min_nu"},
            {"nu_min", r.nu_min},
            {"theta_star", r.theta_star},
            {"point", point_json(r.point)},
            {"delta", r.delta ? json(*r.delta) : json(nullptr)}};
}

json result_json(const MaxZoneResult& r) {
    return {{"type", "max_zone"},
            {"point_opt", point_json(r.point_opt)},
            {"lambda_max", r.lambda_max},
            {"zone", zone_json(r.zone)},
            {"delta", r.delta},
            {"nu_min_at_opt", r.nu_min_at_opt},
            {"theta_min_at_opt", r.theta_min_at_opt},
            {"clamped", r.clamped}};
}

RunResult result_from(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "feasibility") {
        FeasibilityResult r;
        r.feasible = j.at("feasible").get<bool>();
        r.eta_min = j.at("eta_min").get<double>();
        r.argmin = point_from(j.at("argmin"));
        for (const auto& line : j.at("xi_boundary")) {
            Polyline pl;
            for (const auto& p : line) pl.push_back(point_from(p));
            r.xi_boundary.push_back(std::move(pl));
        }
        return r;
    }
    if (type == "min_nu") {
        MinNuResult r;
        r.nu_min = j.at("nu_min").get<double>();
        r.theta_star = j.at("theta_star").get<double>();
        r.point = point_from(j.at("point"));
        if (!j.at("delta").is_null()) r.delta = j.at("delta").get<double>();
        return r;
    }
    if (type == "max_zone") {
        MaxZoneResult r;
        r.point_opt = point_from(j.at("point_opt"));
        r.lambda_max = j.at("lambda_max").get<double>();
        r.zone = zone_from(j.at("zone"));
        r.delta = j.at("delta").get<double>();
        r.nu_min_at_opt = j.at("nu_min_at_opt").get<double>();
        r.theta_min_at_opt = j.at("theta_min_at_opt").get<double>();
        r.clamped = j.at("clamped").get<bool>();
        return r;
    }
    throw std::invalid_argument(fmt::format("unknown result type '{}'", type));
}

}  // namespace

std::string current_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch) {
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json to_json(const RunReport& r) {
    return {{"command", r.command},
            {"material_id", r.material_id},
            {"material_name", r.material_name},
            {"result", std::visit([](const auto& v) { return result_json(v); }, r.result)},
            {"warnings", r.warnings},
            {"tool_version", r.tool_version},
            {"timestamp", r.timestamp}};
}

RunReport report_from_json(const json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.material_id = j.at("material_id").get<std::string>();
    r.material_name = j.at("material_name").get<std::string>();
    r.result = result_from(j.at("result"));
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.tool_version = j.at("tool_version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    return r;
}

bool operator==(const AuxeticZone& a, const AuxeticZone& b) {
    return a.theta1 == b.theta1 && a.theta2 == b.theta2 && a.width == b.width &&
           a.empty == b.empty && a.full == b.full && a.axial == b.axial;
}
bool operator==(const FeasibilityResult& a, const FeasibilityResult& b) {
    return a.feasible == b.feasible && a.eta_min == b.eta_min && a.argmin == b.argmin &&
           a.xi_boundary == b.xi_boundary;
}
bool operator==(const MinNuResult& a, const MinNuResult& b) {
    return a.nu_min == b.nu_min && a.theta_star == b.theta_star && a.point == b.point &&
           a.delta == b.delta;
}
bool operator==(const MaxZoneResult& a, const MaxZoneResult& b) {
    return a.point_opt == b.point_opt && a.lambda_max == b.lambda_max && a.zone == b.zone &&
           a.delta == b.delta && a.nu_min_at_opt == b.nu_min_at_opt &&
           a.theta_min_at_opt == b.theta_min_at_opt && a.clamped == b.clamped;
}
bool operator==(const RunReport& a, const RunReport& b) {
    return a.command == b.command && a.material_id == b.material_id &&
           a.material_name == b.material_name && a.result == b.result &&
           a.warnings == b.warnings && a.tool_version == b.tool_version &&
           a.timestamp == b.timestamp;
}

std::string fixed(double value, int decimals) {
    std::string s = fmt::format("{:.{}f}", value, decimals);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }
double radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string min_nu_row(const std::string& id, const std::string& name, const MinNuResult& r) {
    return fmt::format("{},{},{},{},{},{},{}", id, csv_field(name), fixed(r.nu_min, 4),
                       fixed(degrees(r.theta_star), 1), fixed(r.point.xi3, 4),
                       fixed(r.point.xi1, 4), r.delta ? fixed(degrees(*r.delta), 1) : "");
}

std::string max_zone_row(const std::string& id, const std::string& name, const MaxZoneResult& r) {
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{}", id, csv_field(name),
                       fixed(r.point_opt.xi3, 4), fixed(r.point_opt.xi1, 4),
                       fixed(degrees(r.zone.theta1), 1), fixed(degrees(r.zone.theta2), 1),
                       fixed(degrees(r.zone.width), 1), fixed(degrees(r.delta), 1),
                       fixed(r.nu_min_at_opt, 4), fixed(degrees(r.theta_min_at_opt), 1),
                       r.clamped ? 1 : 0);
}

}  // namespace lamina
