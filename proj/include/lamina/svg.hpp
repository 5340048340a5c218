#pragma once

// Self-contained SVG 1.1 plots: polar diagrams of nu12(theta) and maps of the
// lamination domain.

#include <string>
#include <vector>

#include "lamina/laminate.hpp"

namespace lamina::svg {

/// nu12 sampled on theta in [0, 90] degrees.
struct PolarSeries {
    std::string label;
    std::vector<double> theta_deg;
    std::vector<double> nu;
};

/// Radial mapping r = scale * (nu - nu_floor); nu = 0 sits on zero_radius.
struct PolarLayout {
    double cx = 0.0;
    double cy = 0.0;
    double nu_floor = 0.0;
    double scale = 0.0;
    double zero_radius = 0.0;
    double outer_radius = 0.0;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

PolarLayout polar_layout(const std::vector<PolarSeries>& series, double size);

/// Closed curve over the full turn, unfolded from [0, 90] degrees by the
/// orthotropic symmetries nu(-theta) = nu(theta) = nu(theta + 180).
std::vector<Vec2> polar_curve(const PolarSeries& s, const PolarLayout& layout);

std::string polar_nu12(const std::vector<PolarSeries>& series, const std::string& title);

enum class MarkerKind { EtaMin, NuMin, MaxZone };

struct DomainMarker {
    MarkerKind kind;
    LaminationPoint point;
};

std::string domain_map(const std::vector<std::vector<LaminationPoint>>& contours,
                       const std::vector<DomainMarker>& markers, const std::string& title);

}  // namespace lamina::svg
