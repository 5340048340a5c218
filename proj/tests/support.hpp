#pragma once

// Shared fixtures: reference tables for the bundled plies, independent matrix
// oracles and seeded random generators.

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <string>

#include "lamina/laminate.hpp"
#include "lamina/material.hpp"
#include "lamina/material_db.hpp"

namespace lamina::test {

inline constexpr double kPi = std::numbers::pi;

inline double deg(double rad) { return rad * 180.0 / kPi; }
inline double rad(double deg) { return deg * kPi / 180.0; }

struct PlyRow {
    int id;
    double e1, e2, g12, nu12;
    double t0, t1, r0, r1;
    double tau0, tau1, rho;
};

inline constexpr std::array<PlyRow, 15> kPlies{{
    {1, 10.00, 0.42, 0.75, 0.24, 1.66, 1.34, 0.91, 1.20, 1.383, 1.116, 0.758},
    {2, 181.00, 10.30, 7.17, 0.28, 26.88, 24.74, 19.71, 21.43, 1.254, 1.154, 0.919},
    {3, 205.00, 18.50, 5.59, 0.23, 29.80, 29.14, 24.21, 23.42, 1.272, 1.244, 1.033},
    {4, 86.90, 5.52, 2.14, 0.34, 12.23, 12.11, 10.09, 10.25, 1.193, 1.181, 0.984},
    {5, 207.00, 5.00, 2.60, 0.25, 27.52, 26.85, 24.93, 25.29, 1.088, 1.062, 0.986},
    {6, 76.00, 5.50, 2.10, 0.34, 10.85, 10.74, 8.75, 8.88, 1.221, 1.209, 0.984},
    {7, 207.00, 21.00, 7.00, 0.30, 30.67, 30.35, 23.67, 23.46, 1.307, 1.293, 1.009},
    {8, 134.00, 7.00, 4.20, 0.25, 19.34, 18.12, 15.14, 15.93, 1.214, 1.138, 0.951},
    {9, 85.00, 5.60, 2.10, 0.34, 11.98, 11.89, 9.88, 10.00, 1.198, 1.189, 0.988},
    {10, 294.50, 6.34, 4.90, 0.23, 39.73, 38.01, 34.83, 36.06, 1.102, 1.054, 0.966},
    {11, 109.70, 8.55, 5.31, 0.30, 16.89, 15.53, 11.58, 12.73, 1.327, 1.220, 0.910},
    {12, 131.70, 8.76, 5.03, 0.28, 19.55, 18.26, 14.52, 15.45, 1.265, 1.182, 0.940},
    {13, 133.10, 9.31, 3.74, 0.34, 19.02, 18.74, 15.28, 15.60, 1.219, 1.201, 0.979},
    {14, 135.00, 9.24, 6.28, 0.32, 20.55, 18.89, 14.27, 15.83, 1.298, 1.193, 0.901},
    {15, 128.00, 13.00, 6.40, 0.30, 20.00, 18.77, 13.60, 14.51, 1.378, 1.293, 0.937},
}};

/// nu12_min, theta (deg), xi3, xi1, delta (deg).
struct MinNuRow {
    int id;
    double nu, theta, xi3, xi1, delta;
};

inline constexpr std::array<MinNuRow, 15> kMinNu{{
    {1, -0.42, 31.2, 0.93, 0.72, 10.9},  {2, -0.33, 39.1, 0.68, -0.07, 23.5},
    {3, -0.23, 41.9, 0.55, -0.39, 28.3}, {4, -0.35, 40.2, 0.60, -0.27, 26.4},
    {5, -0.95, 34.2, 0.69, -0.03, 23.0}, {6, -0.28, 40.9, 0.59, -0.29, 26.8},
    {7, -0.16, 42.7, 0.55, -0.39, 28.3}, {8, -0.39, 38.6, 0.67, -0.11, 24.1},
    {9, -0.33, 40.4, 0.60, -0.28, 26.6}, {10, -0.94, 33.1, 0.74, 0.10, 21.0},
    {11, -0.20, 41.2, 0.65, -0.16, 24.8}, {12, -0.28, 40.2, 0.65, -0.16, 24.8},
    {13, -0.29, 40.7, 0.60, -0.27, 26.5}, {14, -0.24, 40.3, 0.67, -0.10, 24.0},
    {15, -0.12, 42.8, 0.59, -0.29, 26.8},
}};

/// xi3, xi1, theta1, theta2, dtheta, delta (deg), nu12_min, theta_min (deg).
struct MaxZoneRow {
    int id;
    double xi3, xi1, theta1, theta2, dtheta, delta, nu, theta_min;
};

inline constexpr std::array<MaxZoneRow, 15> kMaxZone{{
    {1, 1.00, 1.00, 8.9, 81.1, 72.2, 0.0, -0.39, 27.2},
    {2, 0.88, 0.54, 23.6, 66.4, 42.8, 14.3, -0.19, 37.2},
    {3, 0.73, 0.07, 30.7, 59.3, 28.6, 21.5, -0.16, 41.1},
    {4, 0.81, 0.31, 26.9, 63.1, 36.2, 18.0, -0.21, 38.9},
    {5, 0.94, 0.75, 16.2, 73.8, 57.6, 10.3, -0.36, 30.5},
    {6, 0.78, 0.22, 28.6, 61.4, 32.7, 19.3, -0.18, 39.9},
    {7, 0.69, -0.04, 33.0, 56.9, 23.9, 23.1, -0.12, 42.3},
    {8, 0.87, 0.53, 22.9, 67.0, 44.0, 14.5, -0.21, 36.6},
    {9, 0.80, 0.28, 27.4, 62.6, 35.1, 18.5, -0.21, 39.2},
    {10, 0.96, 0.85, 13.9, 76.0, 62.1, 8.0, -0.31, 28.9},
    {11, 0.81, 0.31, 28.3, 61.7, 33.3, 17.9, -0.14, 40.2},
    {12, 0.83, 0.39, 26.2, 63.8, 37.6, 16.8, -0.17, 38.8},
    {13, 0.79, 0.25, 28.1, 61.9, 33.8, 18.8, -0.19, 39.7},
    {14, 0.84, 0.43, 26.3, 63.7, 37.3, 16.2, -0.16, 39.0},
    {15, 0.72, 0.03, 32.9, 57.1, 24.1, 22.1, -0.10, 42.4},
}};

inline EngineeringConstants constants(const PlyRow& r) {
    return {"ply " + std::to_string(r.id), r.e1, r.e2, r.g12, r.nu12};
}

/// Ratios of the listed polar moduli (the analysis input for bundled records).
inline DimensionlessMaterial listed_material(const PlyRow& r) {
    return {r.t0 / r.r1, r.t1 / r.r1, r.r0 / r.r1, 0};
}

// --- Mandel-notation matrix oracle ------------------------------------------

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Stiffness in Mandel form: shear row/column scaled by sqrt 2, so rotations are orthogonal.
inline Mat3 mandel(const ReducedStiffness& q) {
    return {{{q.q11, q.q12, 0.0}, {q.q12, q.q22, 0.0}, {0.0, 0.0, 2.0 * q.q66}}};
}

inline Mat3 multiply(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
    return t;
}

inline double det(const Mat3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

inline Mat3 inverse(const Mat3& a) {
    const double d = det(a);
    Mat3 inv{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            inv[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / d;
        }
    }
    return inv;
}

/// Components in axes turned by theta from the material axes.
inline Mat3 rotate(const Mat3& m, double theta) {
    const double c = std::cos(theta), s = std::sin(theta), r2 = std::sqrt(2.0);
    const Mat3 r{{{c * c, s * s, r2 * c * s}, {s * s, c * c, -r2 * c * s}, {-r2 * c * s, r2 * c * s, c * c - s * s}}};
    return multiply(multiply(r, m), transpose(r));
}

/// -S12/S11 of a Mandel stiffness measured along direction theta.
inline double nu12_matrix(const Mat3& stiffness, double theta) {
    const Mat3 s = inverse(rotate(stiffness, theta));
    return -s[0][1] / s[0][0];
}

/// In-plane stiffness of equal-thickness plies at the given orientations.
inline Mat3 homogenize(const ReducedStiffness& q, std::span<const double> plies) {
    Mat3 a{};
    const Mat3 base = mandel(q);
    for (double p : plies) {
        // A ply turned by p reads as the base ply seen from axes turned by -p.
        const Mat3 r = rotate(base, -p);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a[i][j] += r[i][j] / static_cast<double>(plies.size());
    }
    return a;
}

/// Minimum of nu12 over a uniform theta lattice on [0, pi/2].
struct GridMinimum {
    double nu;
    double theta;
};

inline GridMinimum theta_grid_min(const DimensionlessMaterial& m, const LaminationPoint& p, int n) {
    GridMinimum best{1.0e300, 0.0};
    for (int i = 0; i <= n; ++i) {
        const double t = (kPi / 2.0) * i / n;
        const double v = nu12_laminate(m, p, t);
        if (v < best.nu) best = {v, t};
    }
    return best;
}

// --- generators -------------------------------------------------------------

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// Physically admissible orthotropic ply, spanning wood to high-modulus carbon.
    EngineeringConstants ply() {
        EngineeringConstants ec;
        ec.name = "random";
        ec.e1 = uniform(5.0, 300.0);
        ec.e2 = ec.e1 * uniform(0.02, 0.5);
        ec.g12 = ec.e2 * uniform(0.2, 1.5);
        ec.nu12 = uniform(0.05, 0.45);
        return ec;
    }

    /// Point of the lamination domain, uniform in xi3 then in the admissible xi1 range.
    LaminationPoint point() {
        const double xi3 = uniform(-1.0, 1.0);
        return {xi3, uniform(2.0 * xi3 * xi3 - 1.0, 1.0)};
    }

    double angle(double lo, double hi) { return uniform(lo, hi); }

private:
    std::mt19937_64 rng_;
};

}  // namespace lamina::test
