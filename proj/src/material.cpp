#include "lamina/material.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <fmt/format.h>

namespace lamina {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRelEps = 1.0e-12;

double polar_scale(const PolarParameters& p) {
    return p.t0 * p.t0 + p.t1 * p.t1 + p.r0 * p.r0 + p.r1 * p.r1;
}

}  // namespace

void check_physical(const EngineeringConstants& ec) {
    if (!(ec.e1 > 0.0) || !(ec.e2 > 0.0) || !(ec.g12 > 0.0)) {
        throw MaterialError(fmt::format(
            "material '{}': moduli must be positive (E1={}, E2={}, G12={})",
            ec.name, ec.e1, ec.e2, ec.g12));
    }
    if (!std::isfinite(ec.nu12) || !(ec.nu12 * ec.nu12 < ec.e1 / ec.e2)) {
        throw MaterialError(fmt::format(
            "material '{}': non-physical, nu12^2 = {} must be below E1/E2 = {}",
            ec.name, ec.nu12 * ec.nu12, ec.e1 / ec.e2));
    }
}

ReducedStiffness reduce_stiffness(const EngineeringConstants& ec) {
    check_physical(ec);
    const double denom = 1.0 - ec.nu12 * ec.nu21();
    ReducedStiffness q;
    q.q11 = ec.e1 / denom;
    q.q22 = ec.e2 / denom;
    q.q12 = ec.nu12 * ec.e2 / denom;
    q.q66 = ec.g12;
    return q;
}

int orthotropy_class(double phi0, double phi1) {
    const long quarter_turns = std::lround((phi0 - phi1) / (kPi / 4.0));
    return static_cast<int>(((quarter_turns % 2) + 2) % 2);
}

PolarParameters polar_from_stiffness(const ReducedStiffness& q) {
    PolarParameters p;
    p.t0 = (q.q11 - 2.0 * q.q12 + 4.0 * q.q66 + q.q22) / 8.0;
    p.t1 = (q.q11 + 2.0 * q.q12 + q.q22) / 8.0;

    const double b0 = (q.q11 - 2.0 * q.q12 - 4.0 * q.q66 + q.q22) / 8.0;
    const double b1 = (q.q11 - q.q22) / 8.0;
    p.r0 = std::abs(b0);
    p.phi0 = b0 >= 0.0 ? 0.0 : kPi / 4.0;
    p.r1 = std::abs(b1);
    p.phi1 = b1 >= 0.0 ? 0.0 : kPi / 2.0;
    p.k = orthotropy_class(p.phi0, p.phi1);
    return p;
}

DimensionlessMaterial dimensionless(const PolarParameters& p) {
    const double scale = std::max(p.t0, p.t1);
    if (!(p.r1 > kRelEps * scale)) {
        throw MaterialError(
            "R1 = 0: square-symmetric or isotropic ply has no dimensionless form");
    }
    if (!(p.r0 > kRelEps * scale)) {
        throw MaterialError("R0 = 0: R0-orthotropic ply is outside the model");
    }
    return {p.t0 / p.r1, p.t1 / p.r1, p.r0 / p.r1, p.k};
}

DimensionlessMaterial dimensionless(const EngineeringConstants& ec) {
    return dimensionless(polar_from_stiffness(reduce_stiffness(ec)));
}

double determinant_delta(const PolarParameters& p) {
    const double phi = p.phi0 - p.phi1;
    return 4.0 * p.t1 * (p.t0 * p.t0 - p.r0 * p.r0) -
           8.0 * p.r1 * p.r1 * (p.t0 - p.r0 * std::cos(4.0 * phi));
}

PolarParameters compliance_polar(const PolarParameters& p) {
    const double delta = determinant_delta(p);
    if (!(delta > 0.0)) {
        throw MaterialError(
            fmt::format("stiffness is not positive definite (Delta = {})", delta));
    }
    using cplx = std::complex<double>;
    const cplx e4phi0 = std::polar(1.0, 4.0 * p.phi0);
    const cplx e4phi1 = std::polar(1.0, 4.0 * p.phi1);
    const cplx e2phi1 = std::polar(1.0, 2.0 * p.phi1);
    const cplx e4phi = std::polar(1.0, 4.0 * (p.phi0 - p.phi1));

    const cplx z0 = (p.r1 * p.r1 * e4phi1 - p.t1 * p.r0 * e4phi0) / delta;
    const cplx z1 = p.r1 * e2phi1 * (p.r0 * e4phi - p.t0) / (2.0 * delta);

    PolarParameters s;
    s.t0 = (p.t0 * p.t1 - p.r1 * p.r1) / delta;
    s.t1 = (p.t0 * p.t0 - p.r0 * p.r0) / (4.0 * delta);
    s.r0 = std::abs(z0);
    s.r1 = std::abs(z1);

    // Polar angles are undefined for vanishing moduli; pin them to zero.
    const double tiny = kRelEps * (s.t0 + s.t1);
    s.phi0 = s.r0 > tiny ? std::arg(z0) / 4.0 : 0.0;
    s.phi1 = s.r1 > tiny ? std::arg(z1) / 2.0 : 0.0;
    s.k = orthotropy_class(s.phi0, s.phi1);
    return s;
}

double nu12_from_compliance(const PolarParameters& s, double theta) {
    const double c4 = s.r0 * std::cos(4.0 * (s.phi0 - theta));
    const double num = s.t0 - 2.0 * s.t1 + c4;
    const double den = s.t0 + 2.0 * s.t1 + c4 + 4.0 * s.r1 * std::cos(2.0 * (s.phi1 - theta));
    if (!(den > kRelEps * (s.t0 + s.t1))) {
        throw PoleError(fmt::format("S11({}) = {} is not positive", theta, den));
    }
    return num / den;
}

double nu12_ply(const PolarParameters& p, double theta) {
    const double base = 2.0 * (p.t0 * p.t1 - p.r1 * p.r1);
    const double aniso = p.t0 * p.t0 - p.r0 * p.r0;
    const double harmonic4 = 2.0 * (p.r1 * p.r1 * std::cos(4.0 * (p.phi1 - theta)) -
                                    p.t1 * p.r0 * std::cos(4.0 * (p.phi0 - theta)));
    const double harmonic2 =
        4.0 * p.r1 * (p.k_sign() * p.r0 - p.t0) * std::cos(2.0 * (p.phi1 - theta));

    const double num = base - aniso + harmonic4;
    const double den = base + aniso + harmonic4 + harmonic2;
    if (!(den > kRelEps * polar_scale(p))) {
        throw PoleError(fmt::format(
            "nu12 denominator {} vanishes at theta = {} rad: stiffness not positive definite",
            den, theta));
    }
    return num / den;
}

}  // namespace lamina
