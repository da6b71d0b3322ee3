#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "chorddia/cli.hpp"

namespace chorddia {

namespace {

constexpr double kCanvas = 240.0;
constexpr double kCenter = kCanvas / 2;
constexpr double kRadius = 90.0;
constexpr double kLabelRadius = 105.0;
constexpr double kMarkerRadius = 3.0;

struct Position {
    double x;
    double y;
};

// Point v (0-based) sits at angle 2 pi v / 2n, counterclockwise from the
// positive x-axis. SVG y grows downward.
Position place(Point v, unsigned points, double radius)
{
    const double angle = 2.0 * std::numbers::pi * v / points;
    return {kCenter + radius * std::cos(angle), kCenter - radius * std::sin(angle)};
}

// Fixed three decimals; never "-0.000".
std::string num(double x)
{
    std::string s = fmt::format("{:.3f}", x);
    if (s == "-0.000")
        s = "0.000";
    return s;
}

} // namespace

std::string render_svg(const ChordDiagram& d)
{
    const unsigned points = d.points();
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                       "width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
                       static_cast<int>(kCanvas));
    out += fmt::format("  <title>chord diagram of order {}</title>\n", d.order());
    out += fmt::format("  <circle cx=\"{0}\" cy=\"{0}\" r=\"{1}\" fill=\"none\" stroke=\"black\" "
                       "stroke-width=\"1.5\"/>\n",
                       num(kCenter), num(kRadius));
    for (const auto& [a, b] : d.chords().chords) {
        const auto p = place(a - 1, points, kRadius);
        const auto q = place(b - 1, points, kRadius);
        out += fmt::format("  <line class=\"chord\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" "
                           "stroke=\"black\" stroke-width=\"1.5\"/>\n",
                           num(p.x), num(p.y), num(q.x), num(q.y));
    }
    for (Point v = 0; v < points; ++v) {
        const auto p = place(v, points, kRadius);
        out += fmt::format("  <ellipse class=\"point\" cx=\"{0}\" cy=\"{1}\" rx=\"{2}\" ry=\"{2}\" "
                           "fill=\"black\"/>\n",
                           num(p.x), num(p.y), num(kMarkerRadius));
    }
    for (Point v = 0; v < points; ++v) {
        const auto p = place(v, points, kLabelRadius);
        out += fmt::format("  <text class=\"label\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" "
                           "font-size=\"11\" text-anchor=\"middle\" "
                           "dominant-baseline=\"central\">{}</text>\n",
                           num(p.x), num(p.y), v + 1);
    }
    out += "</svg>\n";
    return out;
}

} // namespace chorddia
