#include "lamina/laminate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace lamina {

namespace {

constexpr double kPi = std::numbers::pi;

double reduce_orientation(double angle) {
    double r = std::remainder(angle, kPi);
    if (r <= -kPi / 2.0) r += kPi;
    return r;
}

double material_scale(const DimensionlessMaterial& m) {
    return 1.0 + m.tau0 * m.tau0 + m.tau0 * m.tau1;
}

}  // namespace

StackingSequence::StackingSequence(std::vector<double> orientations)
    : plies_(std::move(orientations)) {
    if (plies_.empty()) throw std::invalid_argument("stacking sequence is empty");
    for (double& a : plies_) a = reduce_orientation(a);
}

StackingSequence StackingSequence::angle_ply(double delta, int pairs) {
    if (pairs < 1) throw std::invalid_argument("angle-ply needs at least one pair");
    std::vector<double> plies;
    plies.reserve(2 * static_cast<std::size_t>(pairs));
    for (int i = 0; i < pairs; ++i) {
        plies.push_back(delta);
        plies.push_back(-delta);
    }
    return StackingSequence(std::move(plies));
}

LaminationParameters lamination_parameters(const StackingSequence& s) {
    std::complex<double> sum4{0.0, 0.0};
    std::complex<double> sum2{0.0, 0.0};
    for (double delta : s.plies()) {
        sum4 += std::polar(1.0, 4.0 * delta);
        sum2 += std::polar(1.0, 2.0 * delta);
    }
    const double n = static_cast<double>(s.size());
    return {sum4.real() / n, sum4.imag() / n, sum2.real() / n, sum2.imag() / n};
}

double parabola_gap(const LaminationPoint& p) {
    return p.xi1 - (2.0 * p.xi3 * p.xi3 - 1.0);
}

bool in_domain(const LaminationPoint& p) {
    return std::isfinite(p.xi3) && std::isfinite(p.xi1) && p.xi1 <= 1.0 + kDomainTol &&
           p.xi1 >= -1.0 - kDomainTol && parabola_gap(p) >= -kDomainTol;
}

bool on_parabolic_boundary(const LaminationPoint& p, double tol) {
    return std::abs(parabola_gap(p)) <= tol && std::abs(p.xi3) <= 1.0 + tol;
}

LaminationPoint angle_ply_point(double delta) {
    const double xi3 = std::cos(2.0 * delta);
    // xi1 = cos 4delta, written through xi3 so the point sits on the parabola exactly.
    return {xi3, 2.0 * xi3 * xi3 - 1.0};
}

double delta_from_point(const LaminationPoint& p) {
    if (!on_parabolic_boundary(p)) {
        throw std::domain_error(fmt::format(
            "point ({}, {}) is not on the parabolic boundary; no angle-ply realization",
            p.xi3, p.xi1));
    }
    return 0.5 * std::acos(std::clamp(p.xi3, -1.0, 1.0));
}

NuCoefficients nu_coefficients(const DimensionlessMaterial& m, const LaminationPoint& p) {
    const double rho_k = m.signed_rho();
    const double xi3_sq = p.xi3 * p.xi3;
    const double base = 2.0 * (m.tau0 * m.tau1 - xi3_sq);
    const double aniso = m.tau0 * m.tau0 - m.rho * m.rho * p.xi1 * p.xi1;
    NuCoefficients c;
    c.n0 = base - aniso;
    c.d0 = base + aniso;
    c.e = xi3_sq - rho_k * m.tau1 * p.xi1;
    c.f = 4.0 * p.xi3 * (rho_k * p.xi1 - m.tau0);
    return c;
}

double nu12_laminate(const DimensionlessMaterial& m, const LaminationPoint& p, double theta) {
    const NuCoefficients c = nu_coefficients(m, p);
    const double cos4 = std::cos(4.0 * theta);
    const double den = c.denominator(cos4, std::cos(2.0 * theta));
    if (!(den > 1.0e-12 * material_scale(m))) {
        throw PoleError(fmt::format(
            "nu12 denominator {} vanishes at ({}, {}), theta = {} rad", den, p.xi3, p.xi1,
            theta));
    }
    return c.numerator(cos4) / den;
}

double psi(const DimensionlessMaterial& m, const LaminationPoint& p, double theta) {
    return nu_coefficients(m, p).numerator(std::cos(4.0 * theta));
}

double lambda_fn(const DimensionlessMaterial& m, const LaminationPoint& p) {
    const NuCoefficients c = nu_coefficients(m, p);
    if (std::abs(c.e) <= 1.0e-14 * material_scale(m)) {
        throw std::domain_error(fmt::format(
            "lambda undefined at ({}, {}): xi3^2 = (-1)^K tau1 rho xi1", p.xi3, p.xi1));
    }
    return -c.n0 / (2.0 * c.e);
}

AuxeticZone zone_from_lambda(double lambda) {
    AuxeticZone z;
    if (lambda <= -1.0) return z;
    if (lambda >= 1.0) {
        z.theta1 = 0.0;
        z.theta2 = kPi / 2.0;
        z.width = kPi / 2.0;
        z.empty = false;
        z.full = true;
        return z;
    }
    z.theta1 = 0.25 * std::acos(lambda);
    z.theta2 = kPi / 2.0 - z.theta1;
    z.width = z.theta2 - z.theta1;
    z.empty = false;
    return z;
}

AuxeticZone auxetic_zone(const DimensionlessMaterial& m, const LaminationPoint& p) {
    const NuCoefficients c = nu_coefficients(m, p);
    if (std::abs(c.e) <= 1.0e-14 * material_scale(m)) {
        // psi is constant in theta.
        return c.n0 < 0.0 ? zone_from_lambda(1.0) : AuxeticZone{};
    }
    const double lambda = -c.n0 / (2.0 * c.e);
    if (c.e > 0.0) return zone_from_lambda(lambda);

    // Negative cos 4theta coefficient: auxetic where cos 4theta > lambda.
    AuxeticZone z;
    if (lambda >= 1.0) return z;
    if (lambda <= -1.0) return zone_from_lambda(1.0);
    z.theta1 = 0.25 * std::acos(lambda);
    z.theta2 = kPi / 2.0 - z.theta1;
    z.width = 2.0 * z.theta1;
    z.empty = false;
    z.axial = true;
    return z;
}

bool axis_positivity_violated(const DimensionlessMaterial& m, const LaminationPoint& p) {
    return nu12_laminate(m, p, 0.0) <= 0.0 || nu12_laminate(m, p, kPi / 2.0) <= 0.0;
}

}  // namespace lamina
