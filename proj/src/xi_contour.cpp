// Marching squares for the eta = 0 level set on the (xi1, u) grid of the
// canonical half-domain. Crossings are polished by bisection along the cell
// edge and shared between neighbouring cells through a global edge key, so
// segments chain into polylines without any distance matching.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "lamina/auxetic.hpp"

namespace lamina {

namespace {

struct Node {
    double xi1;
    double u;
};

using EdgeKey = std::int64_t;

EdgeKey horizontal_key(int i, int j, int n) { return 2 * (static_cast<EdgeKey>(i) * n + j); }
EdgeKey vertical_key(int i, int j, int n) { return 2 * (static_cast<EdgeKey>(i) * n + j) + 1; }

}  // namespace

std::vector<Polyline> xi_contours(const DimensionlessMaterial& m, int resolution) {
    const int n = std::max(resolution, 3);
    auto node = [&](int i, int j) {
        return Node{-1.0 + 2.0 * i / (n - 1), static_cast<double>(j) / (n - 1)};
    };
    auto field = [&](const Node& q) { return eta(m, half_domain_point(q.xi1, q.u)); };

    std::vector<double> values(static_cast<std::size_t>(n) * n);
    auto at = [&](int i, int j) -> double& { return values[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = field(node(i, j));
    }

    std::map<EdgeKey, LaminationPoint> crossings;
    auto crossing = [&](EdgeKey key, Node a, Node b, double va) -> EdgeKey {
        if (crossings.count(key)) return key;
        // Bisection on the edge parameter keeps the inside/outside bracket.
        const bool a_inside = va < 0.0;
        double lo = 0.0;
        double hi = 1.0;
        for (int it = 0; it < 200 && hi - lo > 1.0e-13; ++it) {
            const double mid = 0.5 * (lo + hi);
            const Node q{a.xi1 + mid * (b.xi1 - a.xi1), a.u + mid * (b.u - a.u)};
            ((field(q) < 0.0) == a_inside ? lo : hi) = mid;
        }
        const double t = 0.5 * (lo + hi);
        crossings[key] = half_domain_point(a.xi1 + t * (b.xi1 - a.xi1), a.u + t * (b.u - a.u));
        return key;
    };

    std::vector<std::pair<EdgeKey, EdgeKey>> segments;
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) {
            const double v[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            const bool in[4] = {v[0] < 0.0, v[1] < 0.0, v[2] < 0.0, v[3] < 0.0};
            const int mask = in[0] | (in[1] << 1) | (in[2] << 2) | (in[3] << 3);
            if (mask == 0 || mask == 15) continue;

            // Edges: 0 bottom (00-10), 1 right (10-11), 2 top (01-11), 3 left (00-01).
            const Node c00 = node(i, j), c10 = node(i + 1, j), c11 = node(i + 1, j + 1),
                       c01 = node(i, j + 1);
            auto edge = [&](int e) -> EdgeKey {
                switch (e) {
                    case 0: return crossing(horizontal_key(i, j, n), c00, c10, v[0]);
                    case 1: return crossing(vertical_key(i + 1, j, n), c10, c11, v[1]);
                    case 2: return crossing(horizontal_key(i, j + 1, n), c01, c11, v[3]);
                    default: return crossing(vertical_key(i, j, n), c00, c01, v[0]);
                }
            };

            std::vector<int> cut;
            if (in[0] != in[1]) cut.push_back(0);
            if (in[1] != in[2]) cut.push_back(1);
            if (in[3] != in[2]) cut.push_back(2);
            if (in[0] != in[3]) cut.push_back(3);

            if (cut.size() == 2) {
                segments.emplace_back(edge(cut[0]), edge(cut[1]));
                continue;
            }
            // Saddle: the cell centre decides which diagonal pair is joined.
            const bool centre_in = 0.25 * (v[0] + v[1] + v[2] + v[3]) < 0.0;
            const bool diagonal_00_11 = in[0];
            if (centre_in == diagonal_00_11) {
                // Corners 10 and 01 are isolated.
                segments.emplace_back(edge(0), edge(1));
                segments.emplace_back(edge(2), edge(3));
            } else {
                // Corners 00 and 11 are isolated.
                segments.emplace_back(edge(3), edge(0));
                segments.emplace_back(edge(1), edge(2));
            }
        }
    }

    std::map<EdgeKey, std::vector<std::size_t>> incident;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        incident[segments[s].first].push_back(s);
        incident[segments[s].second].push_back(s);
    }

    std::vector<bool> used(segments.size(), false);
    std::vector<Polyline> out;
    auto walk = [&](EdgeKey start) {
        Polyline line{crossings.at(start)};
        EdgeKey cur = start;
        for (;;) {
            const auto& segs = incident.at(cur);
            auto next = std::find_if(segs.begin(), segs.end(), [&](std::size_t s) { return !used[s]; });
            if (next == segs.end()) break;
            used[*next] = true;
            cur = segments[*next].first == cur ? segments[*next].second : segments[*next].first;
            line.push_back(crossings.at(cur));
        }
        out.push_back(std::move(line));
    };

    // Open contours first (ends on the domain boundary), then closed loops.
    for (const auto& [key, segs] : incident) {
        if (segs.size() == 1 && !used[segs.front()]) walk(key);
    }
    for (const auto& [key, segs] : incident) {
        if (std::any_of(segs.begin(), segs.end(), [&](std::size_t s) { return !used[s]; })) {
            walk(key);
        }
    }
    return out;
}

}  // namespace lamina
