#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "designforge/gegenbauer.hpp"
#include "designforge/moments.hpp"
#include "designforge/point_set.hpp"
#include "designforge/rng.hpp"

namespace designforge {

enum class CertificateMethod { L2Gegenbauer, TensorGram };

// Approximation certificate: epsilon_achieved = sqrt(max(pair_sum, 0)).
struct EpsilonCertificate {
    double epsilon_achieved = 0.0;
    int strength = 0;
    double pair_sum = 0.0;
    CertificateMethod method = CertificateMethod::L2Gegenbauer;

    std::string method_name() const {
        return method == CertificateMethod::L2Gegenbauer ? "l2-gegenbauer"
                                                         : "tensor-gram";
    }
};

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

// Weighted pairwise Gegenbauer sum sum_{x,y} w(x) w(y) (Q_1+...+Q_t)(<x,y>).
// X is an eps-approximate t-design iff the sum is at most eps^2; exact
// designs give zero.
inline EpsilonCertificate epsilon_l2(const WeightedPointSet& X, int t) {
    if (X.measure != Measure::Sphere) throw Error("L2 certificates are spherical");
    GegenbauerTable table(X.dimension, t);
    const int n = X.size();
    std::vector<std::vector<double>> pts(n);
    std::vector<double> ws(n);
    for (int i = 0; i < n; ++i) {
        pts[i] = X.point_as_doubles(i);
        ws[i] = X.weight(i);
    }
    double acc = 0.0, c = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double q = table.evaluate_sum(t, detail::dot(pts[i], pts[j]));
            double y = ws[i] * ws[j] * q - c;
            double s = acc + y;
            c = (s - acc) - y;
            acc = s;
        }
    EpsilonCertificate cert;
    cert.strength = t;
    cert.pair_sum = acc;
    cert.epsilon_achieved = std::sqrt(std::max(acc, 0.0));
    cert.method = CertificateMethod::L2Gegenbauer;
    return cert;
}

// Probabilistic construction: k = ceil((r-1)/eps^2) uniform points with
// r = dim(P_t) on the sphere, accepted once the pairwise certificate is
// within eps, with escalating seeds.
inline WeightedPointSet construct_l2_approx(int d, int t, double epsilon,
                                            std::uint64_t seed,
                                            int max_retries = 50) {
    if (d < 3) throw DimensionTooSmall("construction requires d >= 3");
    if (epsilon <= 0) throw Error("epsilon must be positive");
    long r = to_long(dim_P_sphere(d, t));
    long k = std::max<long>(
        1, static_cast<long>(std::ceil((r - 1) / (epsilon * epsilon))));

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        std::vector<std::vector<double>> pts;
        pts.reserve(k);
        for (long i = 0; i < k; ++i) pts.push_back(rng.unit_vector(d));
        std::vector<double> ws(k, 1.0 / k);
        auto X = WeightedPointSet::from_doubles(Measure::Sphere, Kind::Unweighted,
                                                d, pts, ws, t);
        if (epsilon_l2(X, t).epsilon_achieved <= epsilon) return X;
    }
    throw RetriesExhausted("no accepted sample after " +
                           std::to_string(max_retries) + " attempts");
}

// c(d,t) = integral of x_1^{2t} over the sphere.
inline Rational tensor_constant(int d, int t) {
    if (d < 1 || t < 1) throw Error("tensor_constant needs d >= 1, t >= 1");
    std::vector<int> e(d, 0);
    e[0] = 2 * t;
    return sphere_moment(MultiIndex(std::move(e)), d);
}

// Frobenius distance between the weighted 2t-th moment tensor of X and the
// sphere's, via the Gram identity <x^{ot 2t}, y^{ot 2t}> = <x,y>^{2t}:
// sqrt(sum_{x,y} w(x)w(y) <x,y>^{2t} - c(d,t)), clamped at zero.
inline double tensor_discrepancy(const WeightedPointSet& X, int t) {
    if (X.measure != Measure::Sphere) throw Error("tensor certificates are spherical");
    const int n = X.size();
    std::vector<std::vector<double>> pts(n);
    std::vector<double> ws(n);
    for (int i = 0; i < n; ++i) {
        pts[i] = X.point_as_doubles(i);
        ws[i] = X.weight(i);
    }
    double acc = 0.0, c = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double ip = detail::dot(pts[i], pts[j]);
            double y = ws[i] * ws[j] * std::pow(ip, 2 * t) - c;
            double s = acc + y;
            c = (s - acc) - y;
            acc = s;
        }
    double v = acc - to_double(tensor_constant(X.dimension, t));
    return std::sqrt(std::max(v, 0.0));
}

// Oracle for the Gram identity: materialize both order-2t moment tensors
// entrywise and take the Frobenius distance directly.
inline double tensor_discrepancy_bruteforce(const WeightedPointSet& X, int t) {
    const int d = X.dimension;
    double entries = std::pow(static_cast<double>(d), 2 * t);
    if (entries >= 1e6) throw TooLarge("d^{2t} too large to materialize");
    const long total = static_cast<long>(entries);
    const int n = X.size();

    double acc = 0.0;
    std::vector<int> beta(2 * t, 0);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < 2 * t; ++i) {
            beta[i] = static_cast<int>(c % d);
            c /= d;
        }
        double lhs = 0.0;
        for (int p = 0; p < n; ++p) {
            double v = X.weight(p);
            for (int i = 0; i < 2 * t; ++i) v *= X.coord(p, beta[i]);
            lhs += v;
        }
        std::vector<int> counts(d, 0);
        for (int i = 0; i < 2 * t; ++i) ++counts[beta[i]];
        double rhs = to_double(sphere_moment(MultiIndex(counts), d));
        acc += (lhs - rhs) * (lhs - rhs);
    }
    return std::sqrt(acc);
}

// Probabilistic tensor construction: k = ceil(eps^{-2}) uniform points,
// accepted once the discrepancy certificate is within eps.
inline WeightedPointSet construct_tensor_approx(int d, int t, double epsilon,
                                                std::uint64_t seed,
                                                int max_retries = 50) {
    if (d < 1) throw Error("dimension must be >= 1");
    if (epsilon <= 0) throw Error("epsilon must be positive");
    long k = std::max<long>(1, static_cast<long>(std::ceil(1.0 / (epsilon * epsilon))));

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        std::vector<std::vector<double>> pts;
        pts.reserve(k);
        for (long i = 0; i < k; ++i) pts.push_back(rng.unit_vector(d));
        std::vector<double> ws(k, 1.0 / k);
        auto X = WeightedPointSet::from_doubles(Measure::Sphere, Kind::Unweighted,
                                                d, pts, ws, std::nullopt);
        if (tensor_discrepancy(X, t) <= epsilon) return X;
    }
    throw RetriesExhausted("no accepted sample after " +
                           std::to_string(max_retries) + " attempts");
}

// Computable lower bound ceil(1 / (eps^2 + c(d,t))) on the size of any
// eps-approximate tensor 2t-design.
inline long tensor_lower_bound(int d, int t, double epsilon) {
    double c = to_double(tensor_constant(d, t));
    return static_cast<long>(std::ceil(1.0 / (epsilon * epsilon + c)));
}

// Simultaneous strengths 2, 4, ..., 2t with k = ceil(t eps^{-2}) points;
// every per-strength discrepancy must be within eps.
inline WeightedPointSet multi_strength_tensor_construct(int d, int t, double epsilon,
                                                        std::uint64_t seed,
                                                        int max_retries = 50) {
    if (d < 1 || t < 1) throw Error("need d >= 1, t >= 1");
    if (epsilon <= 0) throw Error("epsilon must be positive");
    long k = std::max<long>(
        1, static_cast<long>(std::ceil(t / (epsilon * epsilon))));

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        std::vector<std::vector<double>> pts;
        pts.reserve(k);
        for (long i = 0; i < k; ++i) pts.push_back(rng.unit_vector(d));
        std::vector<double> ws(k, 1.0 / k);
        auto X = WeightedPointSet::from_doubles(Measure::Sphere, Kind::Unweighted,
                                                d, pts, ws, std::nullopt);
        bool ok = true;
        for (int s = 1; s <= t && ok; ++s)
            ok = tensor_discrepancy(X, s) <= epsilon;
        if (ok) return X;
    }
    throw RetriesExhausted("no accepted sample after " +
                           std::to_string(max_retries) + " attempts");
}

}  // namespace designforge
