#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "designforge/errors.hpp"
#include "designforge/pi_value.hpp"

namespace designforge {

enum class Measure { Sphere, Gaussian };
enum class Kind { Unweighted, Weighted, Signed };

inline std::string to_string(Measure m) {
    return m == Measure::Sphere ? "sphere" : "gaussian";
}
inline std::string to_string(Kind k) {
    switch (k) {
        case Kind::Unweighted: return "unweighted";
        case Kind::Weighted: return "weighted";
        default: return "signed";
    }
}

// Either an exact PiValue or a binary64. The mode is uniform within one
// point set; mixing is rejected at construction and parse time.
class Scalar {
public:
    Scalar() : v_(0.0) {}
    static Scalar exact(PiValue v) { return Scalar(std::move(v)); }
    static Scalar exact(const Rational& r) { return Scalar(PiValue(r)); }
    static Scalar real(double x) { return Scalar(x); }

    bool is_exact() const { return std::holds_alternative<PiValue>(v_); }

    double value() const {
        if (is_exact()) return std::get<PiValue>(v_).to_double();
        return std::get<double>(v_);
    }

    const PiValue& exact_value() const {
        if (!is_exact()) throw ExactUnsupported("scalar is binary64");
        return std::get<PiValue>(v_);
    }

private:
    explicit Scalar(PiValue v) : v_(std::move(v)) {}
    explicit Scalar(double x) : v_(x) {}
    std::variant<PiValue, double> v_;
};

// The universal design carrier: weighted points in R^d with a measure tag.
struct WeightedPointSet {
    int dimension = 0;
    Measure measure = Measure::Sphere;
    Kind kind = Kind::Unweighted;
    std::vector<std::vector<Scalar>> points;
    std::vector<Scalar> weights;
    std::optional<int> claimed_strength;

    int size() const { return static_cast<int>(points.size()); }

    bool exact_mode() const {
        if (!weights.empty()) return weights.front().is_exact();
        return false;
    }

    double coord(int i, int j) const { return points[i][j].value(); }
    double weight(int i) const { return weights[i].value(); }

    std::vector<double> point_as_doubles(int i) const {
        std::vector<double> p(dimension);
        for (int j = 0; j < dimension; ++j) p[j] = coord(i, j);
        return p;
    }

    static WeightedPointSet from_doubles(Measure measure, Kind kind, int d,
                                         const std::vector<std::vector<double>>& pts,
                                         const std::vector<double>& ws,
                                         std::optional<int> strength = std::nullopt) {
        WeightedPointSet s;
        s.dimension = d;
        s.measure = measure;
        s.kind = kind;
        s.claimed_strength = strength;
        s.points.reserve(pts.size());
        for (const auto& p : pts) {
            std::vector<Scalar> row;
            row.reserve(p.size());
            for (double x : p) row.push_back(Scalar::real(x));
            s.points.push_back(std::move(row));
        }
        s.weights.reserve(ws.size());
        for (double w : ws) s.weights.push_back(Scalar::real(w));
        return s;
    }

    static WeightedPointSet from_rationals(Measure measure, Kind kind, int d,
                                           const std::vector<std::vector<Rational>>& pts,
                                           const std::vector<Rational>& ws,
                                           std::optional<int> strength = std::nullopt) {
        WeightedPointSet s;
        s.dimension = d;
        s.measure = measure;
        s.kind = kind;
        s.claimed_strength = strength;
        s.points.reserve(pts.size());
        for (const auto& p : pts) {
            std::vector<Scalar> row;
            row.reserve(p.size());
            for (const Rational& x : p) row.push_back(Scalar::exact(x));
            s.points.push_back(std::move(row));
        }
        s.weights.reserve(ws.size());
        for (const Rational& w : ws) s.weights.push_back(Scalar::exact(w));
        return s;
    }

    // Structural invariants. Signed spherical sets are exempt from the unit
    // norm requirement: orbit-union constructions put their support on
    // several radii by design.
    void validate() const {
        if (dimension < 1) throw InvariantViolation("dimension must be >= 1");
        if (claimed_strength && *claimed_strength < 0)
            throw InvariantViolation("claimed strength must be >= 0");
        if (points.size() != weights.size())
            throw InvariantViolation("points/weights length mismatch");
        if (points.empty()) throw InvariantViolation("empty point set");
        bool exact = weights.front().is_exact();
        for (const auto& w : weights)
            if (w.is_exact() != exact)
                throw InvariantViolation("mixed exact and float scalars");
        for (const auto& p : points) {
            if (static_cast<int>(p.size()) != dimension)
                throw InvariantViolation("point has wrong dimension");
            for (const auto& x : p) {
                if (x.is_exact() != exact)
                    throw InvariantViolation("mixed exact and float scalars");
                if (!x.is_exact() && !std::isfinite(x.value()))
                    throw InvariantViolation("non-finite coordinate");
            }
        }

        if (exact) {
            PiValue sum;
            for (const auto& w : weights) sum = sum + w.exact_value();
            if (sum != PiValue::one())
                throw InvariantViolation("exact weights do not sum to 1");
        } else {
            double sum = 0.0, c = 0.0;
            for (const auto& w : weights) {
                double y = w.value() - c, t = sum + y;
                c = (t - sum) - y;
                sum = t;
            }
            if (std::abs(sum - 1.0) > 1e-12)
                throw InvariantViolation("weights sum to " + std::to_string(sum) +
                                         ", not 1");
        }

        const int n = size();
        for (int i = 0; i < n; ++i) {
            if (kind == Kind::Unweighted) {
                if (exact) {
                    if (weights[i].exact_value() !=
                        PiValue(make_rational(1, n)))
                        throw InvariantViolation("unweighted set has unequal weights");
                } else if (std::abs(weight(i) - 1.0 / n) > 1e-12) {
                    throw InvariantViolation("unweighted set has unequal weights");
                }
            } else if (kind == Kind::Weighted) {
                bool pos = exact ? (weights[i].exact_value().coeff() > 0 &&
                                    !weights[i].exact_value().is_zero())
                                 : weight(i) > 0;
                if (!pos) throw InvariantViolation("weighted set has nonpositive weight");
            }
        }

        if (measure == Measure::Sphere && kind != Kind::Signed) {
            for (int i = 0; i < n; ++i) {
                if (exact) {
                    PiValue norm2;
                    for (int j = 0; j < dimension; ++j)
                        norm2 = norm2 +
                                points[i][j].exact_value() * points[i][j].exact_value();
                    if (norm2 != PiValue::one())
                        throw InvariantViolation("point " + std::to_string(i) +
                                                 " not on the unit sphere");
                } else {
                    double norm2 = 0.0;
                    for (int j = 0; j < dimension; ++j)
                        norm2 += coord(i, j) * coord(i, j);
                    if (std::abs(norm2 - 1.0) > 1e-12)
                        throw InvariantViolation("point " + std::to_string(i) +
                                                 " not on the unit sphere");
                }
            }
        }
    }
};

}  // namespace designforge
