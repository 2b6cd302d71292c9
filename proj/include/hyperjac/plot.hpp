#pragma once

#include <string>

#include "hyperjac/geometric.hpp"

namespace hyperjac {

struct PlotSpec {
    RealCurve curve;
    std::array<RealPoint, 4> points;  // P1, P2, Q1, Q2
    double x_lo;
    double x_hi;
};

// Deterministic SVG of the chord construction: both real branches of the
// curve sampled at 1024 points, the interpolating cubic, the four inputs,
// the two further intersections and their reflections. Identical inputs give
// identical bytes; numbers use 12 significant digits. A complex intersection
// pair is annotated instead of drawn. Throws DomainError when the curve has
// no real locus on the range.
std::string render_figure_svg(const PlotSpec& spec);

}  // namespace hyperjac
