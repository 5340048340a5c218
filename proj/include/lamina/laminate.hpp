#pragma once

// Laminate geometry (lamination parameters, Miki's domain) and the
// directional Poisson's ratio of an uncoupled orthotropic laminate of
// identical plies.

#include <span>
#include <vector>

#include "lamina/material.hpp"

namespace lamina {

/// (xi3, xi1) in Miki's domain; xi2 = xi4 = 0 in the orthotropy frame.
struct LaminationPoint {
    double xi3 = 0.0;
    double xi1 = 0.0;

    friend bool operator==(const LaminationPoint&, const LaminationPoint&) = default;
};

struct LaminationParameters {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
    double xi4 = 0.0;
};

/// Equal-thickness identical plies; orientations in radians, reduced to (-pi/2, pi/2].
class StackingSequence {
public:
    explicit StackingSequence(std::vector<double> orientations);

    /// Balanced angle-ply [+delta, -delta] repeated `pairs` times.
    static StackingSequence angle_ply(double delta, int pairs = 1);

    std::span<const double> plies() const { return plies_; }
    std::size_t size() const { return plies_.size(); }

private:
    std::vector<double> plies_;
};

/// Directions where nu12 < 0 within [0, pi/2].
///
/// The ordinary case is the band theta1 < theta < theta2 centred on pi/4. When
/// `axial` is set the zone is the complement band (theta < theta1 or
/// theta > theta2); that happens only where the cos 4theta coefficient of psi
/// is negative, which plies that are not auxetic themselves never reach.
struct AuxeticZone {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double width = 0.0;
    bool empty = true;
    bool full = false;
    bool axial = false;
};

inline constexpr double kDomainTol = 1.0e-12;
inline constexpr double kBoundaryTol = 1.0e-9;

LaminationParameters lamination_parameters(const StackingSequence& s);

bool in_domain(const LaminationPoint& p);

/// Signed distance from the parabola in xi1: xi1 - (2 xi3^2 - 1).
double parabola_gap(const LaminationPoint& p);

bool on_parabolic_boundary(const LaminationPoint& p, double tol = kBoundaryTol);

/// Point of the balanced angle-ply +-delta: (cos 2delta, cos 4delta).
LaminationPoint angle_ply_point(double delta);

/// Inverse of angle_ply_point on the parabolic boundary. Throws
/// std::domain_error for interior points.
double delta_from_point(const LaminationPoint& p);

/// Mirror image across xi3 = 0 (plies turned by 90 degrees); theta maps to pi/2 - theta.
inline LaminationPoint mirrored(const LaminationPoint& p) { return {-p.xi3, p.xi1}; }

/**
 * Coefficients of the laminate Poisson's ratio written in c = cos 2theta:
 *
 *   nu12(c) = (n0 + 2E(2c^2 - 1)) / (d0 + 2E(2c^2 - 1) + F c)
 *
 * with E = xi3^2 - (-1)^K tau1 rho xi1 and F = 4 xi3 ((-1)^K rho xi1 - tau0).
 * psi(theta) is the numerator.
 */
struct NuCoefficients {
    double n0 = 0.0;
    double d0 = 0.0;
    double e = 0.0;
    double f = 0.0;

    double numerator(double cos4) const { return n0 + 2.0 * e * cos4; }
    double denominator(double cos4, double cos2) const {
        return d0 + 2.0 * e * cos4 + f * cos2;
    }
};

NuCoefficients nu_coefficients(const DimensionlessMaterial& m, const LaminationPoint& p);

/// Throws PoleError if the denominator vanishes.
double nu12_laminate(const DimensionlessMaterial& m, const LaminationPoint& p, double theta);

/// Numerator of nu12; same sign as nu12 for positive-definite laminates.
double psi(const DimensionlessMaterial& m, const LaminationPoint& p, double theta);

/// Threshold on cos 4theta below which psi < 0. Throws std::domain_error when
/// xi3^2 = (-1)^K tau1 rho xi1 (psi independent of theta).
double lambda_fn(const DimensionlessMaterial& m, const LaminationPoint& p);

/// Band cos 4theta < lambda, symmetric about pi/4.
AuxeticZone zone_from_lambda(double lambda);

/// Zone of the laminate at p, including the degenerate and flipped cases.
AuxeticZone auxetic_zone(const DimensionlessMaterial& m, const LaminationPoint& p);

/// True if nu12 <= 0 on an axis (theta = 0 or pi/2); a theorem excludes this
/// for non-auxetic plies, so callers surface it as a warning.
bool axis_positivity_violated(const DimensionlessMaterial& m, const LaminationPoint& p);

}  // namespace lamina
