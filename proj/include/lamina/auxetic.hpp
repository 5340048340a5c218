#pragma once

/**
 * @file auxetic.hpp
 * @brief Auxeticity criterion, minimum Poisson's ratio and maximum auxetic zone.
 *
 * Every search works on the canonical half of the lamination domain,
 * xi3 >= 0. The other half is its mirror image (plies turned by 90 degrees,
 * theta -> pi/2 - theta) and holds identical optima.
 *
 * The half-domain is parametrized by the box (xi1, u) in [-1, 1] x [0, 1] with
 * xi3 = u sqrt((1 + xi1) / 2); u = 1 is the parabolic (angle-ply) boundary.
 */

#include <optional>
#include <vector>

#include "lamina/laminate.hpp"
#include "lamina/material.hpp"

namespace lamina {

using Polyline = std::vector<LaminationPoint>;

/// Maps the (xi1, u) box onto the canonical half-domain.
LaminationPoint half_domain_point(double xi1, double u);

struct FeasibilityResult {
    bool feasible = false;
    double eta_min = 0.0;
    LaminationPoint argmin;
    /// Ordered eta = 0 contours inside the canonical half-domain.
    std::vector<Polyline> xi_boundary;
};

struct MinNuResult {
    double nu_min = 0.0;
    double theta_star = 0.0;
    LaminationPoint point;
    /// Angle-ply orientation; set only when `point` is on the parabolic boundary.
    std::optional<double> delta;
};

struct MaxZoneResult {
    LaminationPoint point_opt;
    double lambda_max = 0.0;
    AuxeticZone zone;
    double delta = 0.0;
    double nu_min_at_opt = 0.0;
    double theta_min_at_opt = 0.0;
    bool clamped = false;
};

struct DirectionalMinimum {
    double nu = 0.0;
    double theta = 0.0;
};

struct FeasibilityOptions {
    int boundary_samples = 2001;
    int interior_grid = 201;
    int contour_resolution = 201;  ///< below 2 skips the contours
};

struct GlobalSearchOptions {
    int grid = 101;
    int starts = 4;
    double tol_xi = 1.0e-7;
    double tol_theta = 1.0e-7;
    double boundary_snap = 1.0e-6;
};

struct OracleGrid {
    int n_xi3 = 1001;
    int n_xi1 = 1001;
    int n_theta = 1801;
    unsigned workers = 0;
};

struct OracleResult {
    MinNuResult min_nu;
    MaxZoneResult max_zone;
};

/// min over theta of psi: n0 - 2|xi3^2 - (-1)^K tau1 rho xi1|.
double eta(const DimensionlessMaterial& m, const LaminationPoint& p);

FeasibilityResult feasibility(const DimensionlessMaterial& m, const FeasibilityOptions& opt = {});

/// Ordered eta = 0 contours on a resolution x resolution grid of the half-domain.
std::vector<Polyline> xi_contours(const DimensionlessMaterial& m, int resolution);

/// Coefficients of the stationarity condition 4C c^2 + 2B c + (A - C) = 0 in
/// c = cos 2theta.
struct StationaryCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

StationaryCoefficients stationary_coefficients(const DimensionlessMaterial& m,
                                               const LaminationPoint& p);

/// Minimum of nu12 over theta in [0, pi/2] at a fixed lamination point.
DirectionalMinimum min_nu12_at_point(const DimensionlessMaterial& m, const LaminationPoint& p);

MinNuResult min_nu12_global(const DimensionlessMaterial& m, const GlobalSearchOptions& opt = {});

/// Zone-maximizing xi1 from the closed form; nullopt when the stationary point is not real.
std::optional<double> stationary_xi1(const DimensionlessMaterial& m);

/// Lambda restricted to the parabolic boundary, as a function of xi1.
double lambda_hat(const DimensionlessMaterial& m, double xi1);

MaxZoneResult max_zone(const DimensionlessMaterial& m);

/// Exhaustive lattice evaluation used to cross-check the searches above.
OracleResult brute_force_oracle(const DimensionlessMaterial& m, const OracleGrid& grid = {});

}  // namespace lamina
