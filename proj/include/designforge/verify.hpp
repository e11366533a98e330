#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "designforge/moments.hpp"
#include "designforge/multi_index.hpp"
#include "designforge/point_set.hpp"

namespace designforge {

enum class VerifyMode { Exact, Float };

// Moment-residual report over the full monomial basis up to the tested
// strength. In exact mode `pass` means every residual is identically zero.
struct VerificationReport {
    int strength_tested = 0;
    VerifyMode mode = VerifyMode::Float;
    double tolerance = 1e-9;
    std::vector<double> per_degree_max_residual;  // index = degree 0..t
    MultiIndex worst_monomial;
    double worst_residual = 0.0;
    bool pass = false;
    bool exact_zero = false;  // exact mode only: all residuals identically 0

    std::string summary() const {
        std::string s = pass ? "PASS" : "FAIL";
        s += " strength " + std::to_string(strength_tested);
        s += mode == VerifyMode::Exact ? " (exact)" : " (float)";
        s += ", worst monomial " + worst_monomial.to_string();
        s += ", residual " + std::to_string(worst_residual);
        return s;
    }
};

namespace detail {

// x^alpha for one float point, coordinates in index order.
inline double monomial_value(const WeightedPointSet& X, int i,
                             const MultiIndex& alpha) {
    double v = 1.0;
    for (int j = 0; j < X.dimension; ++j)
        for (int e = 0; e < alpha[j]; ++e) v *= X.coord(i, j);
    return v;
}

inline PiValue monomial_value_exact(const WeightedPointSet& X, int i,
                                    const MultiIndex& alpha) {
    PiValue v = PiValue::one();
    for (int j = 0; j < X.dimension; ++j)
        for (int e = 0; e < alpha[j]; ++e)
            v = v * X.points[i][j].exact_value();
    return v;
}

// Compensated weighted monomial sum, deterministic point order.
inline double weighted_sum(const WeightedPointSet& X, const MultiIndex& alpha) {
    double acc = 0.0, c = 0.0;
    for (int i = 0; i < X.size(); ++i) {
        double y = X.weight(i) * monomial_value(X, i, alpha) - c;
        double t = acc + y;
        c = (t - acc) - y;
        acc = t;
    }
    return acc;
}

inline PiPoly weighted_sum_exact(const WeightedPointSet& X, const MultiIndex& alpha) {
    PiPoly acc;
    for (int i = 0; i < X.size(); ++i) {
        PiValue term = X.weights[i].exact_value() * monomial_value_exact(X, i, alpha);
        acc += PiPoly::from_pi_value(term);
    }
    return acc;
}

}  // namespace detail

// Checks sum_x w(x) x^alpha against the measure moment for every
// |alpha| <= t. Exact mode requires exact scalars; residuals live in the
// pi-graded ring and must vanish identically.
inline VerificationReport verify_design(const WeightedPointSet& X, int t,
                                        VerifyMode mode, double tolerance = 1e-9) {
    VerificationReport rep;
    rep.strength_tested = t;
    rep.mode = mode;
    rep.tolerance = tolerance;
    rep.per_degree_max_residual.assign(t + 1, 0.0);
    rep.worst_monomial = MultiIndex(std::vector<int>(X.dimension, 0));

    if (mode == VerifyMode::Exact && !X.exact_mode())
        throw ExactUnsupported("exact verification requires exact scalars");

    bool all_zero = true;
    for (const auto& alpha : enumerate_multi_indices(X.dimension, t)) {
        double resid;
        if (mode == VerifyMode::Exact) {
            PiPoly sum = detail::weighted_sum_exact(X, alpha);
            PiPoly target = PiPoly::from_pi_value(
                measure_moment(X.measure, alpha, X.dimension));
            PiPoly diff = sum - target;
            if (!diff.is_zero()) all_zero = false;
            resid = std::abs(diff.to_double());
        } else {
            double sum = detail::weighted_sum(X, alpha);
            double target =
                measure_moment(X.measure, alpha, X.dimension).to_double();
            resid = std::abs(sum - target);
        }
        int deg = alpha.degree();
        rep.per_degree_max_residual[deg] =
            std::max(rep.per_degree_max_residual[deg], resid);
        if (resid > rep.worst_residual ||
            (resid == rep.worst_residual && alpha > rep.worst_monomial &&
             resid > 0.0)) {
            rep.worst_residual = resid;
            rep.worst_monomial = alpha;
        }
    }

    rep.exact_zero = (mode == VerifyMode::Exact) && all_zero;
    rep.pass = mode == VerifyMode::Exact ? all_zero
                                         : rep.worst_residual <= tolerance;
    return rep;
}

// Result of the odd-monomial vanishing check.
struct OddVanishingReport {
    bool pass = true;
    std::optional<MultiIndex> failing_monomial;
    double residual = 0.0;
};

// Every monomial with some odd exponent and |alpha| <= degree_cap must
// average to zero: exactly for exact sets, within `tolerance` for float.
inline OddVanishingReport verify_odd_vanishing(const WeightedPointSet& X,
                                               int degree_cap,
                                               double tolerance = 1e-12) {
    OddVanishingReport rep;
    bool exact = X.exact_mode();
    for (const auto& alpha : enumerate_multi_indices(X.dimension, degree_cap)) {
        if (alpha.all_even()) continue;
        if (exact) {
            PiPoly sum = detail::weighted_sum_exact(X, alpha);
            if (!sum.is_zero()) {
                rep.pass = false;
                rep.failing_monomial = alpha;
                rep.residual = std::abs(sum.to_double());
                return rep;
            }
        } else {
            double sum = detail::weighted_sum(X, alpha);
            if (std::abs(sum) > tolerance) {
                rep.pass = false;
                rep.failing_monomial = alpha;
                rep.residual = std::abs(sum);
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace designforge
