#include "lamina/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace lamina::svg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<const char*, 4> kPalette{"#1f4e9c", "#c0392b", "#2e8b57", "#7d3c98"};
constexpr std::array<const char*, 4> kDashes{"", "8,4", "2,3", "10,3,2,3"};

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string header(double width, double height) {
    return fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\">\n"
        "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n",
        width, height);
}

std::string points_attr(const std::vector<Vec2>& pts) {
    std::string s;
    for (const auto& p : pts) s += fmt::format("{:.2f},{:.2f} ", p.x, p.y);
    if (!s.empty()) s.pop_back();
    return s;
}

}  // namespace

PolarLayout polar_layout(const std::vector<PolarSeries>& series, double size) {
    double lo = 0.0;
    double hi = 0.0;
    for (const auto& s : series) {
        for (double v : s.nu) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const double span = std::max(hi - lo, 1.0e-6);
    PolarLayout l;
    l.cx = size / 2.0;
    l.cy = size / 2.0;
    l.outer_radius = 0.40 * size;
    l.nu_floor = lo - 0.15 * span;
    l.scale = l.outer_radius / (hi + 0.05 * span - l.nu_floor);
    l.zero_radius = l.scale * (0.0 - l.nu_floor);
    return l;
}

std::vector<Vec2> polar_curve(const PolarSeries& s, const PolarLayout& layout) {
    std::vector<Vec2> pts;
    const std::size_t n = std::min(s.theta_deg.size(), s.nu.size());
    auto emit = [&](double deg, double nu) {
        const double r = layout.scale * (nu - layout.nu_floor);
        const double a = deg * kPi / 180.0;
        pts.push_back({layout.cx + r * std::cos(a), layout.cy - r * std::sin(a)});
    };
    for (int quadrant = 0; quadrant < 4; ++quadrant) {
        for (std::size_t k = 0; k < n; ++k) {
            // Odd quadrants run backwards so the curve stays continuous.
            const std::size_t i = quadrant % 2 == 0 ? k : n - 1 - k;
            const double t = s.theta_deg[i];
            const double deg = quadrant % 2 == 0 ? quadrant * 90.0 + t : (quadrant + 1) * 90.0 - t;
            emit(deg, s.nu[i]);
        }
    }
    return pts;
}

std::string polar_nu12(const std::vector<PolarSeries>& series, const std::string& title) {
    constexpr double kSize = 520.0;
    const PolarLayout l = polar_layout(series, kSize);
    std::ostringstream out;
    out << header(kSize, kSize + 40.0 + 18.0 * series.size());
    out << fmt::format("<text x=\"{}\" y=\"22\" font-family=\"sans-serif\" font-size=\"15\" "
                       "text-anchor=\"middle\">{}</text>\n",
                       l.cx, escape(title));
    out << fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{:.2f}\" fill=\"none\" stroke=\"#bbbbbb\" "
                       "stroke-width=\"0.8\"/>\n",
                       l.cx, l.cy, l.outer_radius);
    for (int deg = 0; deg < 180; deg += 30) {
        const double a = deg * kPi / 180.0;
        out << fmt::format(
            "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#dddddd\" "
            "stroke-width=\"0.6\"/>\n",
            l.cx - l.outer_radius * std::cos(a), l.cy + l.outer_radius * std::sin(a),
            l.cx + l.outer_radius * std::cos(a), l.cy - l.outer_radius * std::sin(a));
    }
    // Inside this circle nu12 < 0.
    out << fmt::format("<circle id=\"zero\" cx=\"{}\" cy=\"{}\" r=\"{:.4f}\" fill=\"none\" "
                       "stroke=\"black\" stroke-width=\"0.5\"/>\n",
                       l.cx, l.cy, l.zero_radius);

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto pts = polar_curve(series[i], l);
        const char* dash = kDashes[i % kDashes.size()];
        out << fmt::format("<polyline class=\"curve\" points=\"{}\" fill=\"none\" stroke=\"{}\" "
                           "stroke-width=\"1.6\"{}/>\n",
                           points_attr(pts), kPalette[i % kPalette.size()],
                           *dash ? fmt::format(" stroke-dasharray=\"{}\"", dash) : "");
        const double y = kSize + 10.0 + 18.0 * i;
        out << fmt::format("<line x1=\"30\" y1=\"{0}\" x2=\"70\" y2=\"{0}\" stroke=\"{1}\" "
                           "stroke-width=\"1.6\"{2}/>\n",
                           y, kPalette[i % kPalette.size()],
                           *dash ? fmt::format(" stroke-dasharray=\"{}\"", dash) : "");
        out << fmt::format("<text x=\"78\" y=\"{:.1f}\" font-family=\"sans-serif\" "
                           "font-size=\"12\">{}</text>\n",
                           y + 4.0, escape(series[i].label));
    }
    out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" "
                       "font-size=\"10\">nu12 = 0</text>\n",
                       l.cx + l.zero_radius * 0.72 + 3.0, l.cy - l.zero_radius * 0.72 - 3.0);
    out << "</svg>\n";
    return out.str();
}

std::string domain_map(const std::vector<std::vector<LaminationPoint>>& contours,
                       const std::vector<DomainMarker>& markers, const std::string& title) {
    constexpr double kW = 520.0;
    constexpr double kH = 340.0;
    constexpr double kMargin = 50.0;
    const double sx = (kW - 2 * kMargin) / 2.0;
    const double sy = (kH - 2 * kMargin - 40.0) / 2.0;
    auto to_px = [&](const LaminationPoint& p) {
        return Vec2{kMargin + (p.xi3 + 1.0) * sx, kMargin + 20.0 + (1.0 - p.xi1) * sy};
    };

    std::ostringstream out;
    out << header(kW, kH + 80.0);
    out << fmt::format("<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" "
                       "text-anchor=\"middle\">{}</text>\n",
                       kW / 2.0, escape(title));

    // Omega: parabola xi1 = 2 xi3^2 - 1 closed by the segment xi1 = 1.
    std::vector<Vec2> omega;
    for (int i = 0; i <= 200; ++i) {
        const double x3 = -1.0 + 2.0 * i / 200.0;
        omega.push_back(to_px({x3, 2.0 * x3 * x3 - 1.0}));
    }
    out << fmt::format("<polygon id=\"omega\" points=\"{}\" fill=\"#f4f6fa\" stroke=\"black\" "
                       "stroke-width=\"1.2\"/>\n",
                       points_attr(omega));
    const Vec2 o = to_px({0.0, 0.0});
    out << fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" "
                       "stroke=\"#cccccc\" stroke-width=\"0.6\"/>\n",
                       to_px({-1.0, 0.0}).x, o.y, to_px({1.0, 0.0}).x);
    out << fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" "
                       "stroke=\"#cccccc\" stroke-width=\"0.6\"/>\n",
                       o.x, to_px({0.0, 1.0}).y, to_px({0.0, -1.0}).y);
    out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" "
                       "font-size=\"12\">xi3</text>\n",
                       to_px({1.0, 0.0}).x + 6.0, o.y + 4.0);
    out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" "
                       "font-size=\"12\">xi1</text>\n",
                       o.x + 4.0, to_px({0.0, 1.0}).y - 8.0);

    for (const auto& line : contours) {
        std::vector<Vec2> px;
        for (const auto& p : line) px.push_back(to_px(p));
        out << fmt::format("<polyline class=\"xi-contour\" points=\"{}\" fill=\"none\" "
                           "stroke=\"#c0392b\" stroke-width=\"1.4\"/>\n",
                           points_attr(px));
    }

    auto marker = [&](MarkerKind kind, Vec2 c) {
        switch (kind) {
            case MarkerKind::EtaMin:
                return fmt::format("<circle class=\"eta-min\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"5\" "
                                   "fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n",
                                   c.x, c.y);
            case MarkerKind::NuMin:
                return fmt::format(
                    "<path class=\"nu-min\" d=\"M {0:.2f} {1:.2f} H {2:.2f} M {3:.2f} {4:.2f} V "
                    "{5:.2f}\" stroke=\"black\" stroke-width=\"1.4\"/>\n",
                    c.x - 6.0, c.y, c.x + 6.0, c.x, c.y - 6.0, c.y + 6.0);
            case MarkerKind::MaxZone:
                return fmt::format("<rect class=\"max-zone\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"10\" "
                                   "height=\"10\" fill=\"none\" stroke=\"black\" "
                                   "stroke-width=\"1.2\"/>\n",
                                   c.x - 5.0, c.y - 5.0);
        }
        return std::string{};
    };
    std::set<MarkerKind> present;
    for (const auto& m : markers) {
        out << marker(m.kind, to_px(m.point));
        present.insert(m.kind);
    }

    // Legend.
    double y = kH + 10.0;
    out << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << fmt::format("<line x1=\"30\" y1=\"{0}\" x2=\"50\" y2=\"{0}\" stroke=\"black\" "
                       "stroke-width=\"1.2\"/><text x=\"58\" y=\"{1}\">boundary of Omega</text>\n",
                       y, y + 4.0);
    if (!contours.empty()) {
        y += 16.0;
        out << fmt::format("<line x1=\"30\" y1=\"{0}\" x2=\"50\" y2=\"{0}\" stroke=\"#c0392b\" "
                           "stroke-width=\"1.4\"/><text x=\"58\" y=\"{1}\">eta = 0 (boundary of "
                           "Xi)</text>\n",
                           y, y + 4.0);
    }
    const std::pair<MarkerKind, const char*> labels[] = {
        {MarkerKind::EtaMin, "eta min"},
        {MarkerKind::NuMin, "nu12 min"},
        {MarkerKind::MaxZone, "max auxetic zone"}};
    for (const auto& [kind, text] : labels) {
        if (!present.count(kind)) continue;
        y += 16.0;
        out << marker(kind, {40.0, y});
        out << fmt::format("<text x=\"58\" y=\"{}\">{}</text>\n", y + 4.0, text);
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace lamina::svg
