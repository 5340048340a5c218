#include "lamina/material_db.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

namespace lamina {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur.push_back('"');
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::optional<double> parse_number(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
        throw DataError(fmt::format("'{}' is not a number", t));
    }
    return v;
}

// Fields keyed by column name, shared by the CSV and JSON readers.
using Row = std::map<std::string, std::string>;

MaterialRecord record_from_row(const Row& row) {
    auto get = [&](const char* key) -> std::optional<double> {
        const auto it = row.find(key);
        if (it == row.end()) return std::nullopt;
        try {
            return parse_number(it->second);
        } catch (const DataError& e) {
            throw DataError(fmt::format("column {}: {}", key, e.what()));
        }
    };
    auto require = [&](const char* key) {
        const auto v = get(key);
        if (!v) throw DataError(fmt::format("missing value for {}", key));
        return *v;
    };

    MaterialRecord r;
    const auto name = row.find("name");
    r.constants.name = name == row.end() ? std::string{} : trim(name->second);
    if (r.constants.name.empty()) throw DataError("missing material name");
    r.constants.e1 = require("E1");
    r.constants.e2 = require("E2");
    r.constants.g12 = require("G12");
    r.constants.nu12 = require("nu12");
    if (const auto it = row.find("provenance"); it != row.end()) r.provenance = trim(it->second);

    const std::array<std::optional<double>, 4> polar{get("T0"), get("T1"), get("R0"), get("R1")};
    const auto present = std::count_if(polar.begin(), polar.end(), [](auto& v) { return v.has_value(); });
    if (present == 4) {
        PolarParameters p;
        p.t0 = *polar[0];
        p.t1 = *polar[1];
        p.r0 = *polar[2];
        p.r1 = *polar[3];
        const double k = get("K").value_or(0.0);
        if (k != 0.0 && k != 1.0) throw DataError("K must be 0 or 1");
        p.k = static_cast<int>(k);
        p.phi0 = p.k * std::numbers::pi / 4.0;
        r.polar = p;
    } else if (present != 0) {
        throw DataError("published polar moduli need all of T0, T1, R0, R1");
    }

    const std::array<std::optional<double>, 3> ratios{get("tau0"), get("tau1"), get("rho")};
    const auto rpresent = std::count_if(ratios.begin(), ratios.end(), [](auto& v) { return v.has_value(); });
    if (rpresent == 3) {
        r.ratios = DimensionlessMaterial{*ratios[0], *ratios[1], *ratios[2], r.polar ? r.polar->k : 0};
    } else if (rpresent != 0) {
        throw DataError("published ratios need all of tau0, tau1, rho");
    }
    return r;
}

}  // namespace

const MaterialRecord& MaterialDatabase::find(const std::string& selector) const {
    int id = 0;
    const auto [ptr, ec] = std::from_chars(selector.data(), selector.data() + selector.size(), id);
    if (ec == std::errc{} && ptr == selector.data() + selector.size()) {
        for (const auto& r : records) {
            if (r.id == id) return r;
        }
        throw std::out_of_range(fmt::format("no material with id {}", id));
    }
    const MaterialRecord* hit = nullptr;
    std::vector<int> ids;
    for (const auto& r : records) {
        if (r.constants.name == selector) {
            hit = &r;
            ids.push_back(r.id);
        }
    }
    if (ids.size() > 1) {
        throw std::invalid_argument(
            fmt::format("material name '{}' is ambiguous (ids {})", selector, fmt::join(ids, ", ")));
    }
    if (hit == nullptr) throw std::out_of_range(fmt::format("no material named '{}'", selector));
    return *hit;
}

MaterialDatabase parse_material_csv(const std::string& text) {
    MaterialDatabase db;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    int line_no = 0;
    int next_id = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (trim(line).empty() || trim(line).front() == '#') continue;

        auto fields = split_csv_line(line);
        if (header.empty()) {
            for (auto& f : fields) header.push_back(trim(f));
            for (const char* col : {"name", "E1", "E2", "G12", "nu12"}) {
                if (std::find(header.begin(), header.end(), col) == header.end()) {
                    throw DataError(fmt::format("line {}: header lacks column '{}'", line_no, col));
                }
            }
            continue;
        }
        const int id = next_id++;
        if (fields.size() != header.size()) {
            db.issues.push_back({line_no, fmt::format("expected {} fields, found {}",
                                                      header.size(), fields.size())});
            continue;
        }
        Row row;
        for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = fields[i];
        try {
            MaterialRecord r = record_from_row(row);
            r.id = id;
            r.line = line_no;
            db.records.push_back(std::move(r));
        } catch (const DataError& e) {
            db.issues.push_back({line_no, e.what()});
        }
    }
    return db;
}

MaterialDatabase parse_material_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(fmt::format("invalid JSON: {}", e.what()));
    }
    if (doc.is_object() && doc.contains("materials")) doc = doc["materials"];
    if (!doc.is_array()) throw DataError("expected a JSON array of materials");

    MaterialDatabase db;
    int index = 0;
    for (const auto& item : doc) {
        ++index;
        if (!item.is_object()) {
            db.issues.push_back({index, "entry is not an object"});
            continue;
        }
        Row row;
        for (const auto& [key, value] : item.items()) {
            if (value.is_string()) {
                row[key] = value.get<std::string>();
            } else if (value.is_number()) {
                row[key] = fmt::format("{}", value.get<double>());
            }
        }
        try {
            MaterialRecord r = record_from_row(row);
            r.id = index;
            r.line = index;
            db.records.push_back(std::move(r));
        } catch (const DataError& e) {
            db.issues.push_back({index, e.what()});
        }
    }
    return db;
}

MaterialDatabase load_materials(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError(fmt::format("cannot read material database '{}'", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.extension() == ".json") return parse_material_json(buf.str());
    return parse_material_csv(buf.str());
}

DimensionlessMaterial analysis_material(const MaterialRecord& r, bool from_constants) {
    check_physical(r.constants);
    if (r.polar && !from_constants) return dimensionless(*r.polar);
    return dimensionless(r.constants);
}

ValidationEntry validate_record(const MaterialRecord& r, const ValidationTolerance& tol) {
    ValidationEntry v;
    v.id = r.id;
    v.line = r.line;
    v.name = r.constants.name;
    v.deviation.fill(std::numeric_limits<double>::quiet_NaN());
    try {
        const PolarParameters p = polar_from_stiffness(reduce_stiffness(r.constants));
        v.computed_polar = p;
        v.computed_ratios = dimensionless(p);
    } catch (const MaterialError& e) {
        v.valid = false;
        v.problems.emplace_back(e.what());
        return v;
    }

    static constexpr std::array<const char*, 7> kNames{"T0", "T1", "R0", "R1", "tau0", "tau1", "rho"};
    if (r.polar) {
        const auto& c = *v.computed_polar;
        const std::array<double, 4> got{c.t0, c.t1, c.r0, c.r1};
        const std::array<double, 4> pub{r.polar->t0, r.polar->t1, r.polar->r0, r.polar->r1};
        for (std::size_t i = 0; i < 4; ++i) v.deviation[i] = got[i] - pub[i];
        if (c.k != r.polar->k) {
            v.valid = false;
            v.problems.push_back(fmt::format("K: computed {}, published {}", c.k, r.polar->k));
        }
    }
    if (r.ratios) {
        const auto& c = *v.computed_ratios;
        v.deviation[4] = c.tau0 - r.ratios->tau0;
        v.deviation[5] = c.tau1 - r.ratios->tau1;
        v.deviation[6] = c.rho - r.ratios->rho;
    }
    for (std::size_t i = 0; i < v.deviation.size(); ++i) {
        const double limit = i < 4 ? tol.moduli : tol.ratios;
        if (std::abs(v.deviation[i]) > limit) {
            v.valid = false;
            v.problems.push_back(
                fmt::format("{} deviates by {:+.4f} (limit {})", kNames[i], v.deviation[i], limit));
        }
    }
    return v;
}

}  // namespace lamina
