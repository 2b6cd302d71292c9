#include "hyperjac/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace hyperjac {

namespace {

constexpr int kSamples = 1024;
constexpr double kWidth = 840.0;
constexpr double kHeight = 600.0;
constexpr double kPad = 40.0;

std::string num(double v) {
    char buf[48];
    if (v == 0.0) v = 0.0;  // normalize -0
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Mapper {
    double x_lo, x_hi, y_lo, y_hi;
    double sx(double x) const { return kPad + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kPad); }
    double sy(double y) const { return kPad + (y_hi - y) / (y_hi - y_lo) * (kHeight - 2 * kPad); }
};

void polyline(std::string& svg, const std::vector<std::pair<double, double>>& pts,
              const Mapper& m, const char* stroke, const char* dash) {
    if (pts.size() < 2) return;
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += stroke;
    svg += "\" stroke-width=\"1.5\"";
    if (dash) {
        svg += " stroke-dasharray=\"";
        svg += dash;
        svg += "\"";
    }
    svg += " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) svg += " ";
        svg += num(m.sx(pts[i].first)) + "," + num(m.sy(pts[i].second));
    }
    svg += "\"/>\n";
}

void marker(std::string& svg, const Mapper& m, double x, double y, const char* fill,
            const std::string& label) {
    svg += "<circle cx=\"" + num(m.sx(x)) + "\" cy=\"" + num(m.sy(y)) +
           "\" r=\"4\" fill=\"" + fill + "\"/>\n";
    svg += "<text x=\"" + num(m.sx(x) + 6) + "\" y=\"" + num(m.sy(y) - 6) +
           "\" font-size=\"12\" font-family=\"monospace\">" + label + "</text>\n";
}

}  // namespace

std::string render_figure_svg(const PlotSpec& spec) {
    if (!(spec.x_hi > spec.x_lo)) throw DomainError("empty x-range");
    GeometricSum sum = geometric_add_real(spec.curve, spec.points);

    // Sample the two branches y = +-sqrt(p(x)).
    std::vector<std::pair<double, double>> upper, lower;
    std::vector<std::vector<std::pair<double, double>>> upper_runs, lower_runs;
    double y_extent = 0.0;
    bool any_real = false;
    for (int i = 0; i < kSamples; ++i) {
        double x = spec.x_lo + (spec.x_hi - spec.x_lo) * i / (kSamples - 1);
        double v = spec.curve.rhs(x);
        if (v >= 0.0) {
            any_real = true;
            double y = std::sqrt(v);
            upper.emplace_back(x, y);
            lower.emplace_back(x, -y);
            y_extent = std::max(y_extent, y);
        } else {
            if (upper.size() > 1) upper_runs.push_back(upper);
            if (lower.size() > 1) lower_runs.push_back(lower);
            upper.clear();
            lower.clear();
        }
    }
    if (upper.size() > 1) upper_runs.push_back(upper);
    if (lower.size() > 1) lower_runs.push_back(lower);
    if (!any_real) throw DomainError("the curve has no real points on the given range");

    for (const auto& p : spec.points) y_extent = std::max(y_extent, std::fabs(p.y));
    if (!sum.complex_pair)
        for (const auto& p : sum.reflected) y_extent = std::max(y_extent, std::fabs(p.y));
    y_extent *= 1.08;
    if (y_extent == 0.0) y_extent = 1.0;

    Mapper m{spec.x_lo, spec.x_hi, -y_extent, y_extent};

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    if (spec.x_lo < 0.0 && spec.x_hi > 0.0) {
        svg += "<line x1=\"" + num(m.sx(0)) + "\" y1=\"" + num(m.sy(-y_extent)) + "\" x2=\"" +
               num(m.sx(0)) + "\" y2=\"" + num(m.sy(y_extent)) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
    svg += "<line x1=\"" + num(m.sx(spec.x_lo)) + "\" y1=\"" + num(m.sy(0)) + "\" x2=\"" +
           num(m.sx(spec.x_hi)) + "\" y2=\"" + num(m.sy(0)) +
           "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    for (const auto& run : upper_runs) polyline(svg, run, m, "#1f6fb4", nullptr);
    for (const auto& run : lower_runs) polyline(svg, run, m, "#1f6fb4", nullptr);

    // interpolating cubic, clipped to the vertical extent
    std::vector<std::pair<double, double>> seg;
    for (int i = 0; i < kSamples; ++i) {
        double x = spec.x_lo + (spec.x_hi - spec.x_lo) * i / (kSamples - 1);
        double y = sum.cubic_at(x);
        if (std::fabs(y) <= y_extent) {
            seg.emplace_back(x, y);
        } else {
            polyline(svg, seg, m, "#c23b3b", "5,3");
            seg.clear();
        }
    }
    polyline(svg, seg, m, "#c23b3b", "5,3");

    static const char* input_labels[4] = {"P1", "P2", "Q1", "Q2"};
    for (std::size_t i = 0; i < 4; ++i)
        marker(svg, m, spec.points[i].x, spec.points[i].y, "#2c8a4b", input_labels[i]);

    if (sum.complex_pair) {
        svg += "<text x=\"" + num(kPad) + "\" y=\"" + num(kPad / 2 + 6) +
               "\" font-size=\"14\" font-family=\"monospace\">ComplexPair: x5,x6 = " +
               num(sum.x5.real()) + " &#177; " + num(std::fabs(sum.x5.imag())) +
               "i</text>\n";
    } else {
        // the further intersections and their reflections
        marker(svg, m, sum.x5.real(), -sum.reflected[0].y, "#e08b2d", "R1");
        marker(svg, m, sum.x6.real(), -sum.reflected[1].y, "#e08b2d", "R2");
        marker(svg, m, sum.reflected[0].x, sum.reflected[0].y, "#7a4fb0", "R1bar");
        marker(svg, m, sum.reflected[1].x, sum.reflected[1].y, "#7a4fb0", "R2bar");
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace hyperjac
