#pragma once

// Small derivative-free minimizers and a deterministic parallel loop.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace lamina::search {

struct Minimum1D {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section search on [lo, hi] for a unimodal f. Returns the best point
/// seen, which includes both interval ends.
template <class F>
Minimum1D golden_section(F&& f, double lo, double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    Minimum1D best{lo, f(lo)};
    if (const double fh = f(hi); fh < best.value) best = {hi, fh};

    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    for (auto [x, v] : {std::pair{c, fc}, std::pair{d, fd}}) {
        if (v < best.value) best = {x, v};
    }
    return best;
}

struct Minimum2D {
    std::array<double, 2> x{};
    double value = 0.0;
};

/// Compass (pattern) search inside the box [lower, upper]. Trial points are
/// clamped to the box, so optima on a face are reached exactly.
template <class F>
Minimum2D compass_search(F&& f, std::array<double, 2> start, std::array<double, 2> lower,
                         std::array<double, 2> upper, std::array<double, 2> step,
                         double tol) {
    Minimum2D cur{start, f(start)};
    while (std::max(step[0], step[1]) > tol) {
        bool moved = false;
        for (int axis = 0; axis < 2 && !moved; ++axis) {
            for (double dir : {1.0, -1.0}) {
                auto trial = cur.x;
                trial[axis] = std::clamp(trial[axis] + dir * step[axis], lower[axis], upper[axis]);
                if (trial == cur.x) continue;
                const double v = f(trial);
                if (v < cur.value) {
                    cur = {trial, v};
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) {
            step[0] *= 0.5;
            step[1] *= 0.5;
        }
    }
    return cur;
}

/// Runs body(i) for i in [0, n) on `workers` threads (0 = hardware
/// concurrency). Each index is visited exactly once; callers write to
/// per-index slots and reduce in index order, so results do not depend on
/// the worker count.
inline void parallel_for(std::size_t n, unsigned workers,
                         const std::function<void(std::size_t)>& body) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
}

}  // namespace lamina::search
