#pragma once

#include <string>

#include "hyperjac/divisor.hpp"

namespace hyperjac {

// Text formats, all exact decimal strings (fractions n/d allowed over the
// rationals).
//
// Curve file: three records in any order, '#' comments and blank lines ignored.
//     field rational        (or: field 31)
//     genus 2
//     coeffs 1 0 0 0 0 1    (a0 .. a_{2g+1}, leading coefficient first)
//
// Divisor: one of
//     identity
//     points:(2,8),(4,8)
//     mumford:[1,-6,8],[8]  (A then B coefficient lists, leading first)

Field parse_field_token(const std::string& token);
FieldElement parse_field_element(const Field& f, const std::string& token);

CurveRef parse_curve_text(const std::string& text);
CurveRef load_curve_file(const std::string& path);

MumfordDivisor parse_divisor(const CurveRef& curve, const std::string& text);

std::string format_divisor(const MumfordDivisor& m);
std::string format_points(const PointDivisor& d);

}  // namespace hyperjac
