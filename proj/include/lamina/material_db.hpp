#pragma once

// Material database: CSV (header name,E1,E2,G12,nu12 plus optional columns)
// or JSON (array of objects with the same field names).
//
// Optional columns: T0,T1,R0,R1 (published polar moduli, GPa), K,
// tau0,tau1,rho (published ratios), provenance.

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamina/material.hpp"

namespace lamina {

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MaterialRecord {
    int id = 0;    ///< 1-based position in the file
    int line = 0;  ///< source line (CSV) or array index + 1 (JSON)
    EngineeringConstants constants;
    std::optional<PolarParameters> polar;
    std::optional<DimensionlessMaterial> ratios;
    std::string provenance;
};

struct RowIssue {
    int line = 0;
    std::string message;
};

struct MaterialDatabase {
    std::vector<MaterialRecord> records;
    std::vector<RowIssue> issues;  ///< malformed rows, skipped from `records`

    /// Selects by 1-based id or exact name. Throws std::out_of_range when
    /// nothing matches and std::invalid_argument when a name is ambiguous.
    const MaterialRecord& find(const std::string& selector) const;
};

MaterialDatabase parse_material_csv(const std::string& text);
MaterialDatabase parse_material_json(const std::string& text);

/// Dispatches on the file extension (.json, anything else is CSV). Throws
/// DataError when the file cannot be read or its header lacks a required column.
MaterialDatabase load_materials(const std::filesystem::path& path);

/// Ratios used for analysis: from the published polar moduli when the
/// record carries them (unless `from_constants`), else converted from the
/// engineering constants.
DimensionlessMaterial analysis_material(const MaterialRecord& r, bool from_constants = false);

struct ValidationTolerance {
    double moduli = 0.01;
    double ratios = 0.001;
};

struct ValidationEntry {
    int id = 0;
    int line = 0;
    std::string name;
    bool valid = true;
    std::vector<std::string> problems;
    std::optional<PolarParameters> computed_polar;
    std::optional<DimensionlessMaterial> computed_ratios;
    /// Signed deviations computed - published: T0,T1,R0,R1,tau0,tau1,rho (NaN when absent).
    std::array<double, 7> deviation{};
};

ValidationEntry validate_record(const MaterialRecord& r, const ValidationTolerance& tol);

}  // namespace lamina
