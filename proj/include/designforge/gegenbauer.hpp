#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "designforge/rational.hpp"

namespace designforge {

// ---- dimension counts and the classical design lower bounds ----

// dim of the degree-k homogeneous harmonics on S^{d-1}.
inline Integer dim_W(int d, int k) {
    if (d < 1 || k < 0) throw Error("dim_W needs d >= 1, k >= 0");
    return binomial(d + k - 1, d - 1) - binomial(d + k - 3, d - 1);
}

// dim of the space of polynomial functions of degree <= t on S^{d-1}.
inline Integer dim_P_sphere(int d, int t) {
    if (d < 1 || t < 0) throw Error("dim_P_sphere needs d >= 1, t >= 0");
    return binomial(d + t - 1, d - 1) + binomial(d + t - 2, d - 1);
}

// dim of polynomials of degree <= t on R^d (Gaussian support is everything).
inline Integer dim_P_gaussian(int d, int t) {
    if (d < 1 || t < 0) throw Error("dim_P_gaussian needs d >= 1, t >= 0");
    return binomial(d + t, t);
}

// Linear programming lower bound on the size of a spherical t-design.
inline Integer delsarte_bound(int d, int t) {
    if (d < 1 || t < 0) throw Error("delsarte_bound needs d >= 1, t >= 0");
    int h = t / 2;
    if (t % 2 == 0)
        return binomial(d + h - 1, d - 1) + binomial(d + h - 2, d - 1);
    return 2 * binomial(d + h - 1, d - 1);
}

// ---- exact Gegenbauer polynomials ----

namespace detail {

// Monomial coefficients of the ultraspherical C_k^lambda, exact, via the
// three-term recurrence k C_k = 2x(k+lambda-1) C_{k-1} - (k+2lambda-2) C_{k-2}.
inline std::vector<std::vector<Rational>> ultraspherical_up_to(int kmax,
                                                               const Rational& lambda) {
    std::vector<std::vector<Rational>> C(kmax + 1);
    C[0] = {Rational(1)};
    if (kmax >= 1) C[1] = {Rational(0), 2 * lambda};
    for (int k = 2; k <= kmax; ++k) {
        std::vector<Rational> c(k + 1, Rational(0));
        Rational f1 = make_rational(2, 1) * (Rational(k) + lambda - 1) / k;
        Rational f2 = (Rational(k) + 2 * lambda - 2) / k;
        for (int j = 0; j < k; ++j) c[j + 1] += f1 * C[k - 1][j];
        for (int j = 0; j <= k - 2; ++j) c[j] -= f2 * C[k - 2][j];
        C[k] = std::move(c);
    }
    return C;
}

}  // namespace detail

// Scale factor between this library's Q_k^d and C_k^{(d-2)/2}.
inline Rational gegenbauer_scale(int k, int d) {
    return make_rational(d + 2 * k - 2, d - 2);
}

// Exact monomial coefficients of Q_k^d (degree k, parity of k). Normalized
// so that Q_k^d(1) = dim_W(d, k); requires d >= 3.
inline std::vector<Rational> gegenbauer_Q(int k, int d) {
    if (d < 3)
        throw DimensionTooSmall("Gegenbauer Q_k^d requires d >= 3, got d = " +
                                std::to_string(d));
    if (k < 0) throw Error("k must be >= 0");
    Rational lambda = make_rational(d - 2, 2);
    auto C = detail::ultraspherical_up_to(k, lambda);
    std::vector<Rational> q = C[k];
    Rational s = gegenbauer_scale(k, d);
    for (auto& c : q) c *= s;
    return q;
}

// Precomputed monomial coefficients of Q_0..Q_kmax for one dimension.
// Built eagerly and immutable afterwards, so shared concurrent reads are safe.
class GegenbauerTable {
public:
    GegenbauerTable(int d, int kmax) : d_(d) {
        if (d < 3) throw DimensionTooSmall("GegenbauerTable requires d >= 3");
        Rational lambda = make_rational(d - 2, 2);
        auto C = detail::ultraspherical_up_to(kmax, lambda);
        coeffs_.resize(kmax + 1);
        float_coeffs_.resize(kmax + 1);
        for (int k = 0; k <= kmax; ++k) {
            Rational s = gegenbauer_scale(k, d);
            coeffs_[k] = C[k];
            for (auto& c : coeffs_[k]) c *= s;
            for (const auto& c : coeffs_[k])
                float_coeffs_[k].push_back(to_double(c));
        }
    }

    int dimension() const { return d_; }
    int kmax() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs(int k) const { return coeffs_[k]; }

    double evaluate(int k, double x) const {
        const auto& c = float_coeffs_[k];
        double acc = 0.0;
        for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j)
            acc = acc * x + c[j];
        return acc;
    }

    // Q_1 + Q_2 + ... + Q_t at x (the k = 0 term excluded).
    double evaluate_sum(int t, double x) const {
        double acc = 0.0;
        for (int k = 1; k <= t; ++k) acc += evaluate(k, x);
        return acc;
    }

    Rational value_at_one(int k) const {
        Rational s(0);
        for (const auto& c : coeffs_[k]) s += c;
        return s;
    }

private:
    int d_;
    std::vector<std::vector<Rational>> coeffs_;
    std::vector<std::vector<double>> float_coeffs_;
};

// Element of the span of the Q_k^d: finitely many exact coefficients.
struct PolyQ {
    int d = 3;
    std::map<int, Rational> coeffs;  // k -> alpha_k, no zero entries stored

    Rational coeff(int k) const {
        auto it = coeffs.find(k);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    int max_degree() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }

    Rational value_at_one() const {
        Rational acc(0);
        for (const auto& [k, a] : coeffs) acc += a * Rational(dim_W(d, k));
        return acc;
    }

    double evaluate(const GegenbauerTable& table, double x) const {
        double acc = 0.0;
        for (const auto& [k, a] : coeffs) acc += to_double(a) * table.evaluate(k, x);
        return acc;
    }
};

// Linearization of a product of two ultrasphericals:
// C_m C_n = sum_k a_{m,n}(k) C_{m+n-2k}, 0 <= k <= min(m,n), exact.
inline std::map<int, Rational> linearization_coeffs(int m, int n,
                                                    const Rational& lambda) {
    if (m < 0 || n < 0) throw Error("degrees must be >= 0");
    if (lambda <= 0) throw Error("lambda must be positive");
    auto poch = [&](const Rational& x, int j) {
        Rational acc(1);
        for (int i = 0; i < j; ++i) acc *= (x + i);
        return acc;
    };
    std::map<int, Rational> out;
    for (int k = 0; k <= std::min(m, n); ++k) {
        Rational num = (Rational(m + n - 2 * k) + lambda) * poch(lambda, k) *
                       poch(lambda, m - k) * poch(lambda, n - k) *
                       poch(2 * lambda, m + n - k) *
                       Rational(factorial(m + n - 2 * k));
        Rational den = (Rational(m + n - k) + lambda) * Rational(factorial(k)) *
                       Rational(factorial(m - k)) * Rational(factorial(n - k)) *
                       poch(lambda, m + n - k) * poch(2 * lambda, m + n - 2 * k);
        out[k] = num / den;
    }
    return out;
}

// Expansion of (Q_t^d)^2 in the Q basis. Coefficients vanish in odd degrees
// and are positive in even degrees up to 2t.
inline PolyQ expand_Q_square(int t, int d) {
    if (d < 3) throw DimensionTooSmall("expand_Q_square requires d >= 3");
    if (t < 1) throw Error("strength must be >= 1");
    Rational lambda = make_rational(d - 2, 2);
    Rational ct = gegenbauer_scale(t, d);
    auto lin = linearization_coeffs(t, t, lambda);
    PolyQ g;
    g.d = d;
    for (const auto& [k, a] : lin) {
        int deg = 2 * t - 2 * k;
        Rational alpha = ct * ct * a / gegenbauer_scale(deg, d);
        if (alpha != 0) g.coeffs[deg] = alpha;
    }
    return g;
}

// Design-size lower bound g(1) / (alpha_0 + eps^2 * max_{1<=k<=t} alpha_k)
// from an LP certificate g = sum alpha_k Q_k^d with g >= 0 on [-1,1] and
// alpha_k <= 0 above degree t. With eps = 0 this is the classical bound.
inline double lp_bound(const PolyQ& g, double epsilon, int t) {
    for (const auto& [k, a] : g.coeffs)
        if (k > t && a > 0)
            throw ConditionViolated("alpha_" + std::to_string(k) +
                                    " = " + to_string(a) + " > 0 above degree " +
                                    std::to_string(t));
    GegenbauerTable table(g.d, g.max_degree());
    const int grid = 10000;
    for (int j = 0; j < grid; ++j) {
        double x = std::cos(std::numbers::pi * j / (grid - 1));
        double v = g.evaluate(table, x);
        if (v < -1e-12)
            throw ConditionViolated("g(" + std::to_string(x) + ") = " +
                                    std::to_string(v) + " < 0");
    }
    Rational alpha_max(0);
    for (int k = 1; k <= t; ++k) alpha_max = std::max(alpha_max, g.coeff(k));
    double denom = to_double(g.coeff(0)) + epsilon * epsilon * to_double(alpha_max);
    return to_double(g.value_at_one()) / denom;
}

// LP bound with the fixed certificate g = (Q_t^d)^2 at strength 2t; the
// numerator g(1) is exactly dim_W(d,t)^2.
inline double approx_lower_bound(int d, int t, double epsilon) {
    return lp_bound(expand_Q_square(t, d), epsilon, 2 * t);
}

}  // namespace designforge
