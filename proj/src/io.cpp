#include "hyperjac/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hyperjac {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool is_decimal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& s, int line = 0) {
    if (!is_decimal(s)) throw ParseError("malformed number '" + s + "'", line);
    return Integer(s);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Field parse_field_token(const std::string& token) {
    if (token == "rational") return Field::rationals();
    Integer p = parse_integer(token);
    try {
        return Field::prime(p);
    } catch (const Error& e) {
        throw ParseError(std::string("bad field modulus: ") + e.what());
    }
}

FieldElement parse_field_element(const Field& f, const std::string& token) {
    std::string s = trim(token);
    auto slash = s.find('/');
    if (slash == std::string::npos) return FieldElement(f, parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return FieldElement(f, Rational(num, den));
}

CurveRef parse_curve_text(const std::string& text) {
    std::optional<Field> field;
    std::optional<int> genus;
    std::vector<std::string> coeff_tokens;
    int coeff_line = 0;

    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        if (key == "field") {
            if (toks.size() != 2) throw ParseError("expected 'field rational' or 'field <p>'", line_no);
            try {
                field = parse_field_token(toks[1]);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no);
            }
        } else if (key == "genus") {
            if (toks.size() != 2 || !is_decimal(toks[1]))
                throw ParseError("expected 'genus <g>'", line_no);
            genus = std::stoi(toks[1]);
        } else if (key == "coeffs") {
            coeff_tokens.assign(toks.begin() + 1, toks.end());
            coeff_line = line_no;
        } else {
            throw ParseError("unknown record '" + key + "'", line_no);
        }
    }
    if (!field) throw ParseError("missing 'field' record");
    if (!genus) throw ParseError("missing 'genus' record");
    if (coeff_tokens.empty()) throw ParseError("missing 'coeffs' record");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(coeff_tokens.size());
    for (const auto& t : coeff_tokens) {
        try {
            coeffs.push_back(parse_field_element(*field, t));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), coeff_line);
        }
    }
    return make_curve(*field, coeffs, *genus);
}

CurveRef load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open curve file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_text(buf.str());
}

namespace {

std::vector<FieldElement> parse_bracket_list(const Field& f, const std::string& text) {
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("expected a bracketed coefficient list, got '" + text + "'");
    std::string inner = s.substr(1, s.size() - 2);
    std::vector<FieldElement> out;
    if (trim(inner).empty()) return out;
    for (const auto& tok : split_on(inner, ',')) out.push_back(parse_field_element(f, tok));
    return out;
}

Polynomial poly_from_leading_first(const Field& f, const std::vector<FieldElement>& coeffs) {
    std::vector<FieldElement> low(coeffs.rbegin(), coeffs.rend());
    return Polynomial(f, std::move(low));
}

MumfordDivisor parse_mumford_body(const CurveRef& curve, const std::string& body) {
    auto close = body.find(']');
    if (close == std::string::npos) throw ParseError("expected mumford:[A...],[B...]");
    std::string a_part = body.substr(0, close + 1);
    std::string rest = trim(body.substr(close + 1));
    if (rest.empty() || rest[0] != ',') throw ParseError("expected ',' between A and B lists");
    std::string b_part = trim(rest.substr(1));
    const Field& f = curve->field();
    Polynomial a = poly_from_leading_first(f, parse_bracket_list(f, a_part));
    Polynomial b = poly_from_leading_first(f, parse_bracket_list(f, b_part));
    return MumfordDivisor(curve, std::move(a), std::move(b));
}

MumfordDivisor parse_points_body(const CurveRef& curve, const std::string& body) {
    const Field& f = curve->field();
    std::vector<CurvePoint> pts;
    std::size_t i = 0;
    const std::string s = trim(body);
    while (i < s.size()) {
        if (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] != '(') throw ParseError("expected '(' in point list at '" + s.substr(i) + "'");
        auto close = s.find(')', i);
        if (close == std::string::npos) throw ParseError("unterminated point");
        std::string pair = s.substr(i + 1, close - i - 1);
        auto parts = split_on(pair, ',');
        if (parts.size() != 2) throw ParseError("expected '(x,y)', got '(" + pair + ")'");
        pts.push_back(
            CurvePoint::affine(parse_field_element(f, parts[0]), parse_field_element(f, parts[1])));
        i = close + 1;
    }
    return mumford_from_points(PointDivisor(curve, std::move(pts)));
}

}  // namespace

MumfordDivisor parse_divisor(const CurveRef& curve, const std::string& text) {
    std::string s = trim(text);
    if (s == "identity") return MumfordDivisor::identity(curve);
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw ParseError("divisor must be 'identity', 'points:...' or 'mumford:...'");
    std::string kind = s.substr(0, colon);
    std::string body = s.substr(colon + 1);
    if (kind == "mumford") return parse_mumford_body(curve, body);
    if (kind == "points") return parse_points_body(curve, body);
    throw ParseError("unknown divisor form '" + kind + "'");
}

namespace {

std::string poly_list(const Polynomial& p) {
    if (p.is_zero()) return "[0]";
    std::string out = "[";
    for (int i = p.degree(); i >= 0; --i) {
        out += p.coeff(static_cast<std::size_t>(i)).str();
        if (i > 0) out += ",";
    }
    out += "]";
    return out;
}

}  // namespace

std::string format_divisor(const MumfordDivisor& m) {
    return "mumford:" + poly_list(m.a_poly()) + "," + poly_list(m.b_poly());
}

std::string format_points(const PointDivisor& d) {
    if (d.points().empty()) return "points:";
    std::string out = "points:";
    for (std::size_t i = 0; i < d.points().size(); ++i) {
        if (i) out += ",";
        out += "(" + d.points()[i].x().str() + "," + d.points()[i].y().str() + ")";
    }
    return out;
}

}  // namespace hyperjac
