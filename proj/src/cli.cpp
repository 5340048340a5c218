#include "lamina/cli.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lamina/auxetic.hpp"
#include "lamina/laminate.hpp"
#include "lamina/material_db.hpp"
#include "lamina/report.hpp"
#include "lamina/search.hpp"
#include "lamina/svg.hpp"

#ifndef LAMINA_DEFAULT_DB
#define LAMINA_DEFAULT_DB "materials.csv"
#endif

namespace lamina {

namespace {

/// Bad input detected after parsing: maps to the usage/domain exit code.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr const char* kFormatNote =
    "Numbers: xi and nu12 with 4 decimals, angles in degrees with 1 decimal\n"
    "(nu12 sweeps use as many decimals as the theta step needs; xi-domain prints\n"
    "shortest round-trip values). Exit codes: 0 success, 2 data error, 3 usage or\n"
    "domain error. LAMINA_DB sets the default database.";

struct Globals {
    std::string db;
    std::string format = "csv";
    std::vector<std::string> tolerance;
    bool from_constants = false;
};

ValidationTolerance parse_tolerance(const std::vector<std::string>& items) {
    ValidationTolerance tol;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError(fmt::format("--tolerance expects key=value, got '{}'", item));
        const std::string key = item.substr(0, eq);
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(fmt::format("--tolerance value for '{}' is not a number", key));
        }
        if (!(value >= 0.0)) throw UsageError(fmt::format("--tolerance value for '{}' is negative", key));
        if (key == "moduli") {
            tol.moduli = value;
        } else if (key == "ratios") {
            tol.ratios = value;
        } else {
            throw UsageError(fmt::format("unknown tolerance key '{}' (moduli, ratios)", key));
        }
    }
    return tol;
}

std::string database_path(const Globals& g) {
    if (!g.db.empty()) return g.db;
    if (const char* env = std::getenv("LAMINA_DB"); env != nullptr && *env != '\0') return env;
    return LAMINA_DEFAULT_DB;
}

MaterialDatabase open_database(const Globals& g, std::ostream& err) {
    MaterialDatabase db = load_materials(database_path(g));
    for (const auto& issue : db.issues) err << fmt::format("warning: line {}: {}\n", issue.line, issue.message);
    if (db.records.empty()) throw DataError("no materials");
    return db;
}

const MaterialRecord& select(const MaterialDatabase& db, const std::string& selector) {
    try {
        return db.find(selector);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::string command_echo(const std::vector<std::string>& args) {
    std::string s = "lamina";
    for (const auto& a : args) s += " " + a;
    return s;
}

std::string num(double v) {
    return fmt::format("{}", v == 0.0 ? 0.0 : v);
}

/// Decimals that keep consecutive theta samples distinct.
int theta_decimals(int grid) {
    int d = 1;
    double step = 90.0 / grid;
    while (d < 6 && std::round(step * std::pow(10.0, d)) != step * std::pow(10.0, d)) ++d;
    return d;
}

// --- materials --------------------------------------------------------------

int materials_list(const MaterialDatabase& db, const Globals& g, std::ostream& out) {
    if (g.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : db.records) {
            arr.push_back({{"id", r.id},
                           {"name", r.constants.name},
                           {"E1", r.constants.e1},
                           {"E2", r.constants.e2},
                           {"G12", r.constants.g12},
                           {"nu12", r.constants.nu12},
                           {"provenance", r.provenance}});
        }
        out << arr.dump(2) << "\n";
        return kExitOk;
    }
    out << "id,name,E1,E2,G12,nu12,provenance\n";
    for (const auto& r : db.records) {
        out << fmt::format("{},{},{},{},{},{},{}\n", r.id, csv_field(r.constants.name), num(r.constants.e1),
                           num(r.constants.e2), num(r.constants.g12), num(r.constants.nu12),
                           csv_field(r.provenance));
    }
    return kExitOk;
}

nlohmann::json polar_json(const PolarParameters& p) {
    return {{"T0", p.t0}, {"T1", p.t1}, {"R0", p.r0}, {"R1", p.r1}, {"K", p.k}};
}

nlohmann::json ratios_json(const DimensionlessMaterial& d) {
    return {{"tau0", d.tau0}, {"tau1", d.tau1}, {"rho", d.rho}, {"K", d.k}};
}

int materials_show(const MaterialRecord& r, const Globals& g, std::ostream& out) {
    const ValidationEntry v = validate_record(r, {});
    if (g.format == "json") {
        nlohmann::json j = {{"id", r.id},
                            {"name", r.constants.name},
                            {"E1", r.constants.e1},
                            {"E2", r.constants.e2},
                            {"G12", r.constants.g12},
                            {"nu12", r.constants.nu12},
                            {"provenance", r.provenance}};
        if (r.polar) j["published_polar"] = polar_json(*r.polar);
        if (r.ratios) j["published_ratios"] = ratios_json(*r.ratios);
        if (v.computed_polar) j["computed_polar"] = polar_json(*v.computed_polar);
        if (v.computed_ratios) j["computed_ratios"] = ratios_json(*v.computed_ratios);
        j["problems"] = v.problems;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    const auto& c = r.constants;
    out << fmt::format("id          {}\nname        {}\n", r.id, c.name);
    out << fmt::format("E1 E2 G12   {} {} {} GPa\nnu12        {}\n", num(c.e1), num(c.e2), num(c.g12),
                       num(c.nu12));
    if (!r.provenance.empty()) out << fmt::format("provenance  {}\n", r.provenance);
    auto polar_line = [&](const char* label, const PolarParameters& p) {
        out << fmt::format("{:<12}T0 {:.4f}  T1 {:.4f}  R0 {:.4f}  R1 {:.4f}  K {}\n", label, p.t0, p.t1, p.r0,
                           p.r1, p.k);
    };
    auto ratio_line = [&](const char* label, const DimensionlessMaterial& d) {
        out << fmt::format("{:<12}tau0 {:.4f}  tau1 {:.4f}  rho {:.4f}\n", label, d.tau0, d.tau1, d.rho);
    };
    if (r.polar) polar_line("published", *r.polar);
    if (v.computed_polar) polar_line("computed", *v.computed_polar);
    if (r.ratios) ratio_line("published", *r.ratios);
    if (v.computed_ratios) ratio_line("computed", *v.computed_ratios);
    for (const auto& p : v.problems) out << fmt::format("problem     {}\n", p);
    return kExitOk;
}

int materials_validate(const MaterialDatabase& db, const Globals& g, const ValidationTolerance& tol,
                       std::ostream& out, std::ostream& err) {
    std::vector<ValidationEntry> entries;
    for (const auto& r : db.records) entries.push_back(validate_record(r, tol));
    int failed = 0;
    for (const auto& e : entries) failed += e.valid ? 0 : 1;

    if (g.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        static constexpr std::array<const char*, 7> keys{"T0", "T1", "R0", "R1", "tau0", "tau1", "rho"};
        for (const auto& e : entries) {
            nlohmann::json dev = nlohmann::json::object();
            for (std::size_t k = 0; k < keys.size(); ++k) {
                if (!std::isnan(e.deviation[k])) dev[keys[k]] = e.deviation[k];
            }
            arr.push_back({{"id", e.id},
                           {"line", e.line},
                           {"name", e.name},
                           {"valid", e.valid},
                           {"deviation", dev},
                           {"problems", e.problems}});
        }
        out << arr.dump(2) << "\n";
    } else {
        out << "id,line,name,status,dT0,dT1,dR0,dR1,dtau0,dtau1,drho,problems\n";
        for (const auto& e : entries) {
            std::string row = fmt::format("{},{},{},{}", e.id, e.line, csv_field(e.name), e.valid ? "ok" : "FAIL");
            for (double d : e.deviation) row += "," + (std::isnan(d) ? std::string{} : fixed(d, 4));
            std::string problems;
            for (const auto& p : e.problems) problems += (problems.empty() ? "" : "; ") + p;
            out << row << "," << csv_field(problems) << "\n";
        }
    }
    for (const auto& e : entries) {
        for (const auto& p : e.problems) err << fmt::format("line {}: {}: {}\n", e.line, e.name, p);
    }
    if (failed > 0 || !db.issues.empty()) {
        err << fmt::format("{} of {} records failed validation, {} malformed rows\n", failed, entries.size(),
                           db.issues.size());
        return kExitData;
    }
    return kExitOk;
}

// --- analyses ---------------------------------------------------------------

struct Job {
    const MaterialRecord* record = nullptr;
    std::optional<RunReport> report;
    std::string error;
};

template <class Analysis>
std::vector<Job> run_jobs(std::vector<const MaterialRecord*> records, const std::string& command,
                          bool from_constants, Analysis analysis) {
    std::vector<Job> jobs(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) jobs[i].record = records[i];
    const std::string stamp = current_timestamp();
    search::parallel_for(jobs.size(), 0, [&](std::size_t i) {
        Job& job = jobs[i];
        try {
            const DimensionlessMaterial m = analysis_material(*job.record, from_constants);
            RunReport rep;
            rep.command = command;
            rep.material_id = std::to_string(job.record->id);
            rep.material_name = job.record->constants.name;
            rep.timestamp = stamp;
            analysis(m, rep);
            job.report = std::move(rep);
        } catch (const std::exception& e) {
            job.error = e.what();
        }
    });
    return jobs;
}

/// Writes rows in database order; returns the exit code.
int emit_jobs(const std::vector<Job>& jobs, bool many, const Globals& g, const char* header,
              const std::function<std::string(const RunReport&)>& row, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    nlohmann::json arr = nlohmann::json::array();
    if (g.format != "json") out << header << "\n";
    for (const auto& job : jobs) {
        const auto& name = job.record->constants.name;
        if (!job.report) {
            err << fmt::format("error: material {} ({}): {}\n", job.record->id, name, job.error);
            code = kExitData;
            continue;
        }
        for (const auto& w : job.report->warnings) {
            err << fmt::format("warning: material {} ({}): {}\n", job.record->id, name, w);
        }
        if (g.format == "json") {
            arr.push_back(to_json(*job.report));
        } else {
            out << row(*job.report) << "\n";
        }
    }
    if (g.format == "json") {
        if (many) {
            out << arr.dump(2) << "\n";
        } else if (!arr.empty()) {
            out << arr[0].dump(2) << "\n";
        }
    }
    return code;
}

std::vector<const MaterialRecord*> selected(const MaterialDatabase& db, const std::string& material, bool all) {
    std::vector<const MaterialRecord*> out;
    if (all) {
        for (const auto& r : db.records) out.push_back(&r);
    } else {
        out.push_back(&select(db, material));
    }
    return out;
}

void axis_warning(const DimensionlessMaterial& m, const LaminationPoint& p, RunReport& rep) {
    if (axis_positivity_violated(m, p)) {
        rep.warnings.push_back("nu12 is not positive along the laminate axes at the optimum");
    }
}

int cmd_min_nu(const MaterialDatabase& db, const Globals& g, const std::string& material, bool all,
               const std::string& echo, std::ostream& out, std::ostream& err) {
    const auto jobs = run_jobs(selected(db, material, all), echo, g.from_constants,
                               [](const DimensionlessMaterial& m, RunReport& rep) {
                                   MinNuResult r = min_nu12_global(m);
                                   if (r.nu_min >= 0.0) {
                                       rep.warnings.push_back(
                                           fmt::format("no auxetic laminate exists (nu12_min = {})", fixed(r.nu_min, 4)));
                                   }
                                   axis_warning(m, r.point, rep);
                                   rep.result = r;
                               });
    return emit_jobs(jobs, all, g, kMinNuHeader,
                     [](const RunReport& rep) {
                         return min_nu_row(rep.material_id, rep.material_name, std::get<MinNuResult>(rep.result));
                     },
                     out, err);
}

int cmd_max_zone(const MaterialDatabase& db, const Globals& g, const std::string& material, bool all,
                 const std::string& echo, std::ostream& out, std::ostream& err) {
    const auto jobs = run_jobs(selected(db, material, all), echo, g.from_constants,
                               [](const DimensionlessMaterial& m, RunReport& rep) {
                                   MaxZoneResult r = max_zone(m);
                                   if (r.zone.empty) rep.warnings.push_back("no auxetic laminate exists");
                                   axis_warning(m, r.point_opt, rep);
                                   rep.result = r;
                               });
    return emit_jobs(jobs, all, g, kMaxZoneHeader,
                     [](const RunReport& rep) {
                         return max_zone_row(rep.material_id, rep.material_name,
                                             std::get<MaxZoneResult>(rep.result));
                     },
                     out, err);
}

struct Nu12Options {
    std::string material;
    std::vector<double> point;
    std::optional<double> angle_ply;
    int theta_grid = 90;
};

int cmd_nu12(const MaterialDatabase& db, const Globals& g, const Nu12Options& o, std::ostream& out) {
    const MaterialRecord& rec = select(db, o.material);
    const DimensionlessMaterial m = analysis_material(rec, g.from_constants);
    LaminationPoint p;
    std::string where;
    if (o.angle_ply) {
        const double deg = *o.angle_ply;
        if (!(deg >= 0.0 && deg <= 90.0)) throw UsageError(fmt::format("angle-ply {} outside [0, 90] degrees", deg));
        p = angle_ply_point(radians(deg));
        where = fmt::format("angle-ply delta={} deg, xi3={}, xi1={}", num(deg), fixed(p.xi3, 4), fixed(p.xi1, 4));
    } else {
        p = {o.point[0], o.point[1]};
        if (!in_domain(p)) {
            throw UsageError(fmt::format("point ({}, {}) is outside the lamination domain", num(p.xi3), num(p.xi1)));
        }
        where = fmt::format("xi3={}, xi1={}", num(p.xi3), num(p.xi1));
    }

    const int decimals = theta_decimals(o.theta_grid);
    std::ostringstream body;
    for (int i = 0; i <= o.theta_grid; ++i) {
        const double deg = 90.0 * i / o.theta_grid;
        double nu = 0.0;
        try {
            nu = nu12_laminate(m, p, radians(deg));
        } catch (const PoleError& e) {
            throw UsageError(e.what());
        }
        body << fixed(deg, decimals) << "," << fixed(nu, 4) << "\n";
    }
    out << fmt::format("# material: {} {}\n# point: {}\n", rec.id, rec.constants.name, where);
    out << "theta_deg,nu12\n" << body.str();
    return kExitOk;
}

int cmd_xi_domain(const MaterialDatabase& db, const Globals& g, const std::string& material, int resolution,
                  bool with_optima, const std::string& echo, std::ostream& out, std::ostream& err) {
    const MaterialRecord& rec = select(db, material);
    const DimensionlessMaterial m = analysis_material(rec, g.from_constants);
    FeasibilityOptions fo;
    fo.contour_resolution = resolution;
    const FeasibilityResult f = feasibility(m, fo);
    if (!f.feasible) {
        err << fmt::format("warning: material {} ({}): no auxetic laminate exists (eta_min = {})\n", rec.id,
                           rec.constants.name, fixed(f.eta_min, 4));
    }

    if (g.format == "json") {
        RunReport rep;
        rep.command = echo;
        rep.material_id = std::to_string(rec.id);
        rep.material_name = rec.constants.name;
        rep.result = f;
        rep.timestamp = current_timestamp();
        if (!f.feasible) rep.warnings.push_back("no auxetic laminate exists");
        out << to_json(rep).dump(2) << "\n";
        return kExitOk;
    }

    out << "kind,segment,xi3,xi1\n";
    int segment = 0;
    for (const auto& line : f.xi_boundary) {
        for (const auto& p : line) out << fmt::format("contour,{},{},{}\n", segment, num(p.xi3), num(p.xi1));
        ++segment;
    }
    // Mirror half: plies turned by 90 degrees.
    for (const auto& line : f.xi_boundary) {
        for (const auto& p : line) {
            out << fmt::format("contour,{},{},{}\n", segment, num(-p.xi3), num(p.xi1));
        }
        ++segment;
    }
    out << fmt::format("eta_min,0,{},{}\n", num(f.argmin.xi3), num(f.argmin.xi1));
    if (with_optima) {
        const MinNuResult mn = min_nu12_global(m);
        const MaxZoneResult mz = max_zone(m);
        out << fmt::format("nu_min,0,{},{}\n", num(mn.point.xi3), num(mn.point.xi1));
        out << fmt::format("max_zone,0,{},{}\n", num(mz.point_opt.xi3), num(mz.point_opt.xi1));
    }
    return kExitOk;
}

// --- plot -------------------------------------------------------------------

struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field.push_back('"');
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    out.push_back(std::move(field));
    return out;
}

CsvTable read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError(fmt::format("cannot read '{}'", path));
    CsvTable t;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            t.comments.push_back(line);
            continue;
        }
        auto fields = split_csv(line);
        if (t.header.empty()) {
            t.header = std::move(fields);
        } else {
            if (fields.size() != t.header.size()) {
                throw UsageError(fmt::format("{}:{}: expected {} fields", path, line_no, t.header.size()));
            }
            t.rows.push_back(std::move(fields));
        }
    }
    if (t.rows.empty()) throw UsageError(fmt::format("'{}' has no data rows", path));
    return t;
}

double cell_number(const std::string& text, const std::string& path) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(fmt::format("{}: '{}' is not a number", path, text));
    }
}

std::string file_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::string plot_polar(const std::vector<std::string>& inputs, const std::string& title) {
    std::vector<svg::PolarSeries> series;
    for (const auto& path : inputs) {
        const CsvTable t = read_table(path);
        if (t.header.size() < 2 || t.header[0] != "theta_deg") {
            throw UsageError(fmt::format("{}: polar-nu12 needs columns theta_deg,<series>...", path));
        }
        std::string label = file_stem(path);
        for (const auto& c : t.comments) {
            if (c.rfind("# material:", 0) == 0) label = c.substr(11);
        }
        if (!label.empty() && label[0] == ' ') label.erase(0, 1);
        for (std::size_t col = 1; col < t.header.size(); ++col) {
            svg::PolarSeries s;
            s.label = t.header.size() == 2 ? label : t.header[col];
            for (const auto& row : t.rows) {
                const double theta = cell_number(row[0], path);
                if (theta < 0.0 || theta > 90.0) throw UsageError(fmt::format("{}: theta {} outside [0, 90]", path, theta));
                s.theta_deg.push_back(theta);
                s.nu.push_back(cell_number(row[col], path));
            }
            series.push_back(std::move(s));
        }
    }
    return svg::polar_nu12(series, title.empty() ? "Poisson's ratio nu12(theta)" : title);
}

std::string plot_domain(const std::vector<std::string>& inputs, const std::string& title) {
    std::vector<Polyline> contours;
    std::vector<svg::DomainMarker> markers;
    for (const auto& path : inputs) {
        const CsvTable t = read_table(path);
        if (t.header != std::vector<std::string>{"kind", "segment", "xi3", "xi1"}) {
            throw UsageError(fmt::format("{}: domain-map needs columns kind,segment,xi3,xi1", path));
        }
        std::map<std::string, Polyline> segments;
        std::vector<std::string> order;
        for (const auto& row : t.rows) {
            const LaminationPoint p{cell_number(row[2], path), cell_number(row[3], path)};
            if (row[0] == "contour") {
                if (!segments.count(row[1])) order.push_back(row[1]);
                segments[row[1]].push_back(p);
            } else if (row[0] == "eta_min") {
                markers.push_back({svg::MarkerKind::EtaMin, p});
            } else if (row[0] == "nu_min") {
                markers.push_back({svg::MarkerKind::NuMin, p});
            } else if (row[0] == "max_zone") {
                markers.push_back({svg::MarkerKind::MaxZone, p});
            } else {
                throw UsageError(fmt::format("{}: unknown kind '{}'", path, row[0]));
            }
        }
        for (const auto& key : order) contours.push_back(std::move(segments[key]));
    }
    return svg::domain_map(contours, markers, title.empty() ? "Lamination domain" : title);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Auxetic laminate analysis of orthotropic plies", "lamina"};
    app.footer(kFormatNote);
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);

    Globals g;
    app.add_option("--db", g.db, "Material database (CSV or JSON)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--tolerance", g.tolerance, "Validation tolerance override: moduli=<GPa> or ratios=<value>")
        ->take_all();
    app.add_flag("--from-constants", g.from_constants,
                 "Derive polar moduli from E1, E2, G12, nu12 even when the database lists them");

    auto* materials = app.add_subcommand("materials", "List, show or validate the material database");
    materials->require_subcommand(1);
    auto* m_list = materials->add_subcommand("list", "List materials");
    std::string show_sel;
    auto* m_show = materials->add_subcommand("show", "Show one material");
    m_show->add_option("material", show_sel, "Material id or name")->required();
    auto* m_validate = materials->add_subcommand("validate", "Recompute polar moduli and ratios");

    Nu12Options nu;
    auto* nu12 = app.add_subcommand("nu12", "Directional Poisson's ratio of a laminate over theta in [0, 90] deg");
    nu12->add_option("material", nu.material, "Material id or name")->required();
    auto* point_opt = nu12->add_option("--point", nu.point, "Lamination point xi3 xi1")->expected(2);
    auto* ply_opt = nu12->add_option("--angle-ply", nu.angle_ply, "Angle-ply orientation delta in degrees");
    point_opt->excludes(ply_opt);
    nu12->add_option("--theta-grid", nu.theta_grid, "Number of theta intervals")
        ->check(CLI::Range(1, 1000000));

    std::string material;
    bool all = false;
    auto add_material_selector = [&](CLI::App* sub) {
        auto* pos = sub->add_option("material", material, "Material id or name");
        auto* flag = sub->add_flag("--all", all, "Every material, in database order");
        pos->excludes(flag);
    };
    auto* min_nu = app.add_subcommand("min-nu", "Minimum Poisson's ratio over all uncoupled laminates");
    add_material_selector(min_nu);
    auto* max_zone_cmd = app.add_subcommand("max-zone", "Laminate with the widest auxetic zone");
    add_material_selector(max_zone_cmd);

    int resolution = 201;
    bool with_optima = false;
    auto* xi = app.add_subcommand("xi-domain", "Boundary of the auxetic region of the lamination domain");
    xi->add_option("material", material, "Material id or name")->required();
    xi->add_option("--resolution", resolution, "Contour grid resolution")->check(CLI::Range(2, 100000));
    xi->add_flag("--with-optima", with_optima, "Also emit the nu12 minimum and maximum-zone points");

    std::vector<std::string> inputs;
    std::string kind;
    std::string output;
    std::string title;
    auto* plot = app.add_subcommand("plot", "Render result CSV files as SVG");
    plot->add_option("input", inputs, "Input CSV file(s)")->required();
    plot->add_option("--kind", kind, "Plot kind")->required()->check(CLI::IsMember({"polar-nu12", "domain-map"}));
    plot->add_option("-o,--output", output, "SVG output path ('-' for standard output)")->required();
    plot->add_option("--title", title, "Plot title");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string echo = command_echo(args);
    try {
        const ValidationTolerance tol = parse_tolerance(g.tolerance);

        if (plot->parsed()) {
            const std::string svg = kind == "polar-nu12" ? plot_polar(inputs, title) : plot_domain(inputs, title);
            if (output == "-") {
                out << svg;
            } else {
                std::ofstream f(output, std::ios::binary);
                if (!f) throw UsageError(fmt::format("cannot write '{}'", output));
                f << svg;
            }
            return kExitOk;
        }

        const MaterialDatabase db = open_database(g, err);
        if (materials->parsed()) {
            int code = kExitOk;
            if (m_list->parsed()) code = materials_list(db, g, out);
            if (m_show->parsed()) code = materials_show(select(db, show_sel), g, out);
            if (m_validate->parsed()) return materials_validate(db, g, tol, out, err);
            return db.issues.empty() ? code : kExitData;
        }
        if (nu12->parsed()) {
            if (nu.point.empty() && !nu.angle_ply) throw UsageError("nu12 needs --point or --angle-ply");
            return cmd_nu12(db, g, nu, out);
        }
        if (min_nu->parsed() || max_zone_cmd->parsed()) {
            if (material.empty() && !all) throw UsageError("name a material or pass --all");
            return min_nu->parsed() ? cmd_min_nu(db, g, material, all, echo, out, err)
                                    : cmd_max_zone(db, g, material, all, echo, out, err);
        }
        if (xi->parsed()) return cmd_xi_domain(db, g, material, resolution, with_optima, echo, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const MaterialError& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace lamina
