#include "lamina/auxetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "lamina/search.hpp"

namespace lamina {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTieTol = 1.0e-12;

double lattice(int i, int n, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

DirectionalMinimum dense_theta_minimum(const DimensionlessMaterial& m, const LaminationPoint& p) {
    constexpr int kSamples = 3601;
    std::vector<double> values(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        values[i] = nu12_laminate(m, p, lattice(i, kSamples, 0.0, kHalfPi));
    }
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    if (*hi_it - *lo_it <= kTieTol) return {values.front(), 0.0};

    const auto best = static_cast<int>(lo_it - values.begin());
    const double a = lattice(std::max(best - 1, 0), kSamples, 0.0, kHalfPi);
    const double b = lattice(std::min(best + 1, kSamples - 1), kSamples, 0.0, kHalfPi);
    const auto refined = search::golden_section(
        [&](double t) { return nu12_laminate(m, p, t); }, a, b, 1.0e-10);
    if (refined.value < *lo_it) return {refined.value, refined.x};
    return {*lo_it, lattice(best, kSamples, 0.0, kHalfPi)};
}

// Lexicographic preference: lower value, then smaller theta.
bool better_direction(const DirectionalMinimum& cand, const DirectionalMinimum& best) {
    if (cand.nu < best.nu - kTieTol) return true;
    return std::abs(cand.nu - best.nu) <= kTieTol && cand.theta < best.theta;
}

}  // namespace

LaminationPoint half_domain_point(double xi1, double u) {
    return {u * std::sqrt(std::max(0.0, 0.5 * (1.0 + xi1))), xi1};
}

double eta(const DimensionlessMaterial& m, const LaminationPoint& p) {
    const NuCoefficients c = nu_coefficients(m, p);
    return c.n0 - 2.0 * std::abs(c.e);
}

FeasibilityResult feasibility(const DimensionlessMaterial& m, const FeasibilityOptions& opt) {
    auto eta_box = [&](const std::array<double, 2>& x) {
        return eta(m, half_domain_point(x[0], x[1]));
    };

    std::array<double, 2> best_x{1.0, 1.0};
    double best = eta_box(best_x);
    auto consider = [&](std::array<double, 2> x) {
        const double v = eta_box(x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    };
    for (int i = 0; i < opt.boundary_samples; ++i) {
        consider({lattice(i, opt.boundary_samples, -1.0, 1.0), 1.0});
    }
    for (int i = 0; i < opt.interior_grid; ++i) {
        for (int j = 0; j < opt.interior_grid; ++j) {
            consider({lattice(i, opt.interior_grid, -1.0, 1.0),
                      lattice(j, opt.interior_grid, 0.0, 1.0)});
        }
    }

    const double h = 2.0 / (opt.interior_grid - 1);
    auto refined = search::compass_search(eta_box, best_x, {-1.0, 0.0}, {1.0, 1.0},
                                          {h, 0.5 * h}, 1.0e-10);
    if (refined.value < best) {
        best = refined.value;
        best_x = refined.x;
    }
    if (best_x[1] == 1.0) {
        const double hb = 2.0 / (opt.boundary_samples - 1);
        const auto along = search::golden_section(
            [&](double xi1) { return eta_box({xi1, 1.0}); }, std::max(-1.0, best_x[0] - 2.0 * hb),
            std::min(1.0, best_x[0] + 2.0 * hb), 1.0e-12);
        if (along.value < best) {
            best = along.value;
            best_x = {along.x, 1.0};
        }
    }

    FeasibilityResult r;
    r.eta_min = best;
    r.argmin = half_domain_point(best_x[0], best_x[1]);
    r.feasible = best < 0.0;
    if (r.feasible && opt.contour_resolution >= 2) r.xi_boundary = xi_contours(m, opt.contour_resolution);
    return r;
}

StationaryCoefficients stationary_coefficients(const DimensionlessMaterial& m,
                                               const LaminationPoint& p) {
    const double rho_k = m.signed_rho();
    const double x3 = p.xi3;
    const double x1 = p.xi1;
    const double x3_sq = x3 * x3;
    StationaryCoefficients s;
    s.a = x3 * (m.rho * m.rho * x1 * x1 - 5.0 * x3_sq + 3.0 * rho_k * m.tau1 * x1 +
                2.0 * m.tau0 * m.tau1 - m.tau0 * m.tau0);
    s.b = -2.0 * (rho_k * x1 + m.tau0) * (rho_k * m.tau1 * x1 - x3_sq);
    s.c = x3 * (rho_k * m.tau1 * x1 - x3_sq);
    return s;
}

DirectionalMinimum min_nu12_at_point(const DimensionlessMaterial& m, const LaminationPoint& p) {
    const StationaryCoefficients s = stationary_coefficients(m, p);
    if (std::abs(s.c) <= 1.0e-12) return dense_theta_minimum(m, p);

    std::vector<double> thetas{0.0, kPi / 4.0, kHalfPi};
    const double disc = s.b * s.b - 4.0 * s.c * (s.a - s.c);
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        for (double sign : {1.0, -1.0}) {
            const double cos2 = -(s.b + sign * root) / (4.0 * s.c);
            if (std::abs(cos2) <= 1.0 + 1.0e-12) {
                thetas.push_back(0.5 * std::acos(std::clamp(cos2, -1.0, 1.0)));
            }
        }
    }

    DirectionalMinimum best{std::numeric_limits<double>::infinity(), 0.0};
    for (double t : thetas) {
        const DirectionalMinimum cand{nu12_laminate(m, p, t), t};
        if (better_direction(cand, best)) best = cand;
    }
    return best;
}

MinNuResult min_nu12_global(const DimensionlessMaterial& m, const GlobalSearchOptions& opt) {
    const int n = opt.grid;
    auto objective = [&](const std::array<double, 2>& x) {
        return min_nu12_at_point(m, half_domain_point(x[0], x[1])).nu;
    };

    struct Sample {
        double value;
        int i;
        int j;
    };
    std::vector<Sample> samples;
    samples.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            samples.push_back(
                {objective({lattice(i, n, -1.0, 1.0), lattice(j, n, 0.0, 1.0)}), i, j});
        }
    }
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
        return std::tie(a.value, a.i, a.j) < std::tie(b.value, b.i, b.j);
    });

    // Distinct starts: at least two cells apart from every earlier start.
    std::vector<Sample> starts;
    for (const Sample& s : samples) {
        if (static_cast<int>(starts.size()) >= opt.starts) break;
        const bool close = std::any_of(starts.begin(), starts.end(), [&](const Sample& t) {
            return std::abs(t.i - s.i) <= 2 && std::abs(t.j - s.j) <= 2;
        });
        if (!close) starts.push_back(s);
    }

    const double hx = 2.0 / (n - 1);
    const double hu = 1.0 / (n - 1);
    search::Minimum2D best{{0.0, 0.0}, std::numeric_limits<double>::infinity()};
    for (const Sample& s : starts) {
        const auto local = search::compass_search(
            objective, {lattice(s.i, n, -1.0, 1.0), lattice(s.j, n, 0.0, 1.0)}, {-1.0, 0.0},
            {1.0, 1.0}, {hx, hu}, opt.tol_xi);
        const LaminationPoint lp = half_domain_point(local.x[0], local.x[1]);
        const LaminationPoint bp = half_domain_point(best.x[0], best.x[1]);
        const bool wins = local.value < best.value - kTieTol ||
                          (std::abs(local.value - best.value) <= kTieTol && lp.xi3 > bp.xi3);
        if (wins) best = local;
    }

    MinNuResult r;
    r.point = half_domain_point(best.x[0], best.x[1]);
    if (std::abs(parabola_gap(r.point)) <= opt.boundary_snap) {
        const double delta0 = delta_from_point(half_domain_point(best.x[0], 1.0));
        auto along = [&](double d) { return min_nu12_at_point(m, angle_ply_point(d)).nu; };
        const double width = 4.0 * hx;
        auto refined = search::golden_section(along, std::max(0.0, delta0 - width),
                                              std::min(kPi / 4.0, delta0 + width), 1.0e-11);
        if (!(refined.value <= along(delta0))) refined = {delta0, along(delta0)};
        r.point = angle_ply_point(refined.x);
        r.delta = refined.x;
    }
    const DirectionalMinimum dm = min_nu12_at_point(m, r.point);
    r.nu_min = dm.nu;
    r.theta_star = dm.theta;
    return r;
}

namespace {

std::pair<double, double> zone_quadratic(const DimensionlessMaterial& m) {
    // a rho^2 x^2 - 2 rho^2 x + (1 + a c0) = 0, a = 2 (-1)^K rho tau1 - 1.
    const double rk = m.signed_rho();
    const double a = 2.0 * rk * m.tau1 - 1.0;
    const double rho_sq = m.rho * m.rho;
    const double disc =
        rho_sq * rho_sq + rho_sq * a * (a * (2.0 * m.tau1 - m.tau0) * m.tau0 - 2.0 * rk * m.tau1);
    return {a, disc};
}

}  // namespace

double lambda_hat(const DimensionlessMaterial& m, double xi1) {
    const double num = m.tau0 * m.tau0 - 2.0 * m.tau0 * m.tau1 + 1.0 + xi1 -
                       m.rho * m.rho * xi1 * xi1;
    const double den = 1.0 + (1.0 - 2.0 * m.signed_rho() * m.tau1) * xi1;
    return num / den;
}

std::optional<double> stationary_xi1(const DimensionlessMaterial& m) {
    const auto [a, disc] = zone_quadratic(m);
    const double rho_sq = m.rho * m.rho;
    if (std::abs(a) <= 1.0e-14) return 1.0 / (2.0 * rho_sq);
    if (disc < 0.0) return std::nullopt;
    return (rho_sq - std::sqrt(disc)) / (rho_sq * a);
}

namespace {

// With n0 < 0 at the lambda-hat pole, |lambda| > 1 on both sides of it and
// every direction is auxetic. Returns the largest xi1 of that plateau, nudged
// toward the pole until the zone is full, or nothing when there is no plateau.
std::optional<double> full_plateau_end(const DimensionlessMaterial& m) {
    const double b = 1.0 - 2.0 * m.signed_rho() * m.tau1;
    if (std::abs(b) <= 1.0e-14) return std::nullopt;
    const double pole = -1.0 / b;
    if (!(pole > -1.0 && pole < 1.0)) return std::nullopt;
    if (nu_coefficients(m, half_domain_point(pole, 1.0)).n0 >= 0.0) return std::nullopt;

    // lambda-hat = s <=> -rho^2 x^2 + (1 - s b) x + (c0 + 1 - s) = 0.
    const double rho_sq = m.rho * m.rho;
    const double c0 = m.tau0 * m.tau0 - 2.0 * m.tau0 * m.tau1;
    double end = 1.0;
    for (double s : {1.0, -1.0}) {
        const double lin = 1.0 - s * b;
        const double disc = lin * lin + 4.0 * rho_sq * (c0 + 1.0 - s);
        if (disc < 0.0) continue;
        for (double sign : {1.0, -1.0}) {
            const double x = (lin + sign * std::sqrt(disc)) / (2.0 * rho_sq);
            if (x > pole && x < end) end = x;
        }
    }
    if (end == 1.0) return end;
    for (double step = 1.0e-12; step < 1.0e-6; step *= 10.0) {
        const double x = std::max(pole, end - step);
        if (auxetic_zone(m, half_domain_point(x, 1.0)).full) return x;
    }
    return std::nullopt;
}

}  // namespace

MaxZoneResult max_zone(const DimensionlessMaterial& m) {
    struct Candidate {
        double xi1;
        bool stationary;
    };
    std::vector<Candidate> candidates;
    if (const auto x = stationary_xi1(m)) candidates.push_back({*x, true});
    if (const auto [a, disc] = zone_quadratic(m); std::abs(a) > 1.0e-14 && disc >= 0.0) {
        const double rho_sq = m.rho * m.rho;
        candidates.push_back({(rho_sq + std::sqrt(disc)) / (rho_sq * a), true});
    }
    if (const auto x = full_plateau_end(m)) candidates.push_back({*x, true});
    candidates.push_back({1.0, false});
    candidates.push_back({-1.0, false});

    const Candidate* chosen = nullptr;
    AuxeticZone chosen_zone;
    for (const Candidate& c : candidates) {
        if (!(c.xi1 >= -1.0 && c.xi1 <= 1.0)) continue;
        const LaminationPoint p = half_domain_point(c.xi1, 1.0);
        // The pole itself is represented by its plateau end.
        if (std::abs(nu_coefficients(m, p).e) <= 1.0e-14) continue;
        const AuxeticZone z = auxetic_zone(m, p);
        const bool wins = chosen == nullptr || z.width > chosen_zone.width + kTieTol ||
                          (std::abs(z.width - chosen_zone.width) <= kTieTol &&
                           c.xi1 > chosen->xi1);
        if (wins) {
            chosen = &c;
            chosen_zone = z;
        }
    }

    MaxZoneResult r;
    if (chosen == nullptr) return r;
    r.point_opt = half_domain_point(chosen->xi1, 1.0);
    r.lambda_max = lambda_hat(m, chosen->xi1);
    r.zone = chosen_zone;
    r.delta = delta_from_point(r.point_opt);
    r.clamped = !chosen->stationary;
    const DirectionalMinimum dm = min_nu12_at_point(m, r.point_opt);
    r.nu_min_at_opt = dm.nu;
    r.theta_min_at_opt = dm.theta;
    return r;
}

OracleResult brute_force_oracle(const DimensionlessMaterial& m, const OracleGrid& grid) {
    const int n_theta = grid.n_theta;
    std::vector<double> cos4(n_theta);
    std::vector<double> cos2(n_theta);
    for (int k = 0; k < n_theta; ++k) {
        const double t = lattice(k, n_theta, 0.0, kHalfPi);
        cos4[k] = std::cos(4.0 * t);
        cos2[k] = std::cos(2.0 * t);
    }

    struct LatticeMin {
        double nu = std::numeric_limits<double>::infinity();
        int theta_index = 0;
    };
    auto theta_min = [&](const LaminationPoint& p) {
        const NuCoefficients c = nu_coefficients(m, p);
        LatticeMin best;
        for (int k = 0; k < n_theta; ++k) {
            const double v = c.numerator(cos4[k]) / c.denominator(cos4[k], cos2[k]);
            if (v < best.nu) {
                best.nu = v;
                best.theta_index = k;
            }
        }
        return best;
    };

    struct RowBest {
        LatticeMin nu;
        LaminationPoint nu_point;
        bool nu_on_boundary = false;
        double width = -1.0;
        LaminationPoint zone_point;
        bool zone_on_boundary = false;
    };
    std::vector<RowBest> rows(grid.n_xi1);

    search::parallel_for(rows.size(), grid.workers, [&](std::size_t row) {
        const double xi1 = lattice(static_cast<int>(row), grid.n_xi1, -1.0, 1.0);
        const double bound = std::sqrt(std::max(0.0, 0.5 * (1.0 + xi1)));
        std::vector<std::pair<double, bool>> xi3s;
        for (int i = 0; i < grid.n_xi3; ++i) {
            const double x3 = lattice(i, grid.n_xi3, 0.0, 1.0);
            if (x3 < bound) xi3s.emplace_back(x3, false);
        }
        xi3s.emplace_back(bound, true);

        RowBest& rb = rows[row];
        for (const auto& [x3, boundary] : xi3s) {
            const LaminationPoint p{x3, xi1};
            const LatticeMin lm = theta_min(p);
            if (lm.nu < rb.nu.nu) {
                rb.nu = lm;
                rb.nu_point = p;
                rb.nu_on_boundary = boundary;
            }
            const double w = auxetic_zone(m, p).width;
            if (w > rb.width || (w == rb.width && x3 > rb.zone_point.xi3)) {
                rb.width = w;
                rb.zone_point = p;
                rb.zone_on_boundary = boundary;
            }
        }
    });

    const RowBest* nu_best = &rows.front();
    const RowBest* zone_best = &rows.front();
    for (const RowBest& rb : rows) {
        if (rb.nu.nu < nu_best->nu.nu) nu_best = &rb;
        if (rb.width >= zone_best->width) zone_best = &rb;
    }

    OracleResult out;
    out.min_nu.nu_min = nu_best->nu.nu;
    out.min_nu.theta_star = lattice(nu_best->nu.theta_index, n_theta, 0.0, kHalfPi);
    out.min_nu.point = nu_best->nu_point;
    if (nu_best->nu_on_boundary) out.min_nu.delta = delta_from_point(nu_best->nu_point);

    MaxZoneResult& mz = out.max_zone;
    mz.point_opt = zone_best->zone_point;
    mz.zone = auxetic_zone(m, mz.point_opt);
    const NuCoefficients c = nu_coefficients(m, mz.point_opt);
    mz.lambda_max = c.e != 0.0 ? -c.n0 / (2.0 * c.e) : std::numeric_limits<double>::quiet_NaN();
    mz.delta = zone_best->zone_on_boundary ? delta_from_point(mz.point_opt)
                                           : std::numeric_limits<double>::quiet_NaN();
    mz.clamped = mz.point_opt.xi1 == 1.0 || mz.point_opt.xi1 == -1.0;
    const LatticeMin at_opt = theta_min(mz.point_opt);
    mz.nu_min_at_opt = at_opt.nu;
    mz.theta_min_at_opt = lattice(at_opt.theta_index, n_theta, 0.0, kHalfPi);
    return out;
}

}  // namespace lamina
