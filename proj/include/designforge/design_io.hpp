#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "designforge/point_set.hpp"

namespace designforge {

// Shortest decimal that round-trips back to the same binary64.
inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s, int line) {
    double x = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ParseError(line, "malformed number '" + s + "'");
    if (!std::isfinite(x)) throw ParseError(line, "non-finite value '" + s + "'");
    return x;
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline bool is_float_token(const std::string& s) {
    return s.find_first_of(".eE") != std::string::npos ||
           s.find("inf") != std::string::npos || s.find("nan") != std::string::npos;
}

inline bool is_rational_token(const std::string& s) {
    return s.find('/') != std::string::npos;
}

inline std::string expect_field(const std::string& line_text, const std::string& key,
                                int line) {
    auto pos = line_text.find(':');
    if (pos == std::string::npos || line_text.substr(0, pos) != key)
        throw ParseError(line, "expected '" + key + ":' field");
    std::string v = line_text.substr(pos + 1);
    auto b = v.find_first_not_of(" \t");
    if (b == std::string::npos) throw ParseError(line, "empty '" + key + ":' field");
    auto e = v.find_last_not_of(" \t\r");
    return v.substr(b, e - b + 1);
}

}  // namespace detail

// Line-oriented design file:
//   design v1
//   measure: sphere|gaussian
//   dimension: <d>
//   kind: unweighted|weighted|signed
//   strength: <t>          (optional)
//   points: <N>
//   <w> <x1> ... <xd>      x N
// Tokens "p/q" are exact rationals, decimal tokens are binary64; one file
// must stick to one mode.
inline WeightedPointSet read_design(std::istream& in) {
    std::vector<std::string> lines;
    std::string l;
    while (std::getline(in, l)) {
        if (!l.empty() && l.back() == '\r') l.pop_back();
        lines.push_back(l);
    }

    int ln = 1;
    auto next_line = [&](const char* what) -> std::string {
        if (ln > static_cast<int>(lines.size()))
            throw ParseError(ln, std::string("missing ") + what);
        return lines[ln - 1];
    };

    if (next_line("header") != "design v1")
        throw ParseError(1, "malformed header (want 'design v1')");
    ++ln;

    WeightedPointSet set;
    std::string measure = detail::expect_field(next_line("measure"), "measure", ln);
    if (measure == "sphere")
        set.measure = Measure::Sphere;
    else if (measure == "gaussian")
        set.measure = Measure::Gaussian;
    else
        throw ParseError(ln, "unknown measure '" + measure + "'");
    ++ln;

    std::string dim = detail::expect_field(next_line("dimension"), "dimension", ln);
    try {
        set.dimension = std::stoi(dim);
    } catch (...) {
        throw ParseError(ln, "malformed dimension '" + dim + "'");
    }
    if (set.dimension < 1) throw ParseError(ln, "dimension must be >= 1");
    ++ln;

    std::string kind = detail::expect_field(next_line("kind"), "kind", ln);
    if (kind == "unweighted")
        set.kind = Kind::Unweighted;
    else if (kind == "weighted")
        set.kind = Kind::Weighted;
    else if (kind == "signed")
        set.kind = Kind::Signed;
    else
        throw ParseError(ln, "unknown kind '" + kind + "'");
    ++ln;

    std::string maybe = next_line("points count");
    if (maybe.rfind("strength:", 0) == 0) {
        std::string st = detail::expect_field(maybe, "strength", ln);
        try {
            set.claimed_strength = std::stoi(st);
        } catch (...) {
            throw ParseError(ln, "malformed strength '" + st + "'");
        }
        ++ln;
        maybe = next_line("points count");
    }

    std::string npts = detail::expect_field(maybe, "points", ln);
    long n = 0;
    try {
        n = std::stol(npts);
    } catch (...) {
        throw ParseError(ln, "malformed point count '" + npts + "'");
    }
    if (n < 1) throw ParseError(ln, "point count must be >= 1");
    ++ln;

    // First pass: tokenize all point lines and settle the scalar mode.
    std::vector<std::vector<std::string>> rows;
    bool any_float = false, any_rational = false;
    int float_line = 0, rational_line = 0;
    for (long i = 0; i < n; ++i, ++ln) {
        if (ln > static_cast<int>(lines.size()))
            throw ParseError(ln, "point count mismatch");
        auto toks = detail::split_ws(lines[ln - 1]);
        if (toks.empty()) throw ParseError(ln, "point count mismatch");
        if (static_cast<int>(toks.size()) != set.dimension + 1)
            throw ParseError(ln, "expected " + std::to_string(set.dimension + 1) +
                                     " numbers, got " + std::to_string(toks.size()));
        for (const auto& t : toks) {
            if (detail::is_float_token(t)) {
                any_float = true;
                if (!float_line) float_line = ln;
            } else if (detail::is_rational_token(t)) {
                any_rational = true;
                if (!rational_line) rational_line = ln;
            }
        }
        rows.push_back(std::move(toks));
    }
    for (int rest = ln; rest <= static_cast<int>(lines.size()); ++rest)
        if (!detail::split_ws(lines[rest - 1]).empty())
            throw ParseError(rest, "point count mismatch");

    if (any_float && any_rational)
        throw ParseError(std::max(float_line, rational_line),
                         "mixed exact and float tokens");
    bool exact = !any_float;

    int row_line = ln - static_cast<int>(n);
    for (long i = 0; i < n; ++i, ++row_line) {
        const auto& toks = rows[i];
        if (exact) {
            std::vector<Rational> vals;
            for (const auto& t : toks) {
                Rational r;
                try {
                    r = rational_from_string(t);
                } catch (const Error& e) {
                    throw ParseError(row_line, e.what());
                }
                vals.push_back(r);
            }
            set.weights.push_back(Scalar::exact(vals[0]));
            std::vector<Scalar> p;
            for (int j = 1; j <= set.dimension; ++j)
                p.push_back(Scalar::exact(vals[j]));
            set.points.push_back(std::move(p));
        } else {
            set.weights.push_back(Scalar::real(parse_double(toks[0], row_line)));
            std::vector<Scalar> p;
            for (int j = 1; j <= set.dimension; ++j)
                p.push_back(Scalar::real(parse_double(toks[j], row_line)));
            set.points.push_back(std::move(p));
        }
    }

    set.validate();
    return set;
}

inline WeightedPointSet read_design(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_design(in);
}

inline std::string scalar_token(const Scalar& s) {
    if (s.is_exact()) {
        const PiValue& v = s.exact_value();
        if (!v.is_rational())
            throw ExactUnsupported("design files hold rational exact values only");
        return to_string(v.coeff());
    }
    return format_double(s.value());
}

inline void write_design(const WeightedPointSet& set, std::ostream& out) {
    out << "design v1\n";
    out << "measure: " << to_string(set.measure) << "\n";
    out << "dimension: " << set.dimension << "\n";
    out << "kind: " << to_string(set.kind) << "\n";
    if (set.claimed_strength) out << "strength: " << *set.claimed_strength << "\n";
    out << "points: " << set.size() << "\n";
    for (int i = 0; i < set.size(); ++i) {
        out << scalar_token(set.weights[i]);
        for (int j = 0; j < set.dimension; ++j)
            out << " " << scalar_token(set.points[i][j]);
        out << "\n";
    }
}

inline void write_design(const WeightedPointSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_design(set, out);
}

}  // namespace designforge
