#pragma once

#include <map>

#include "designforge/multi_index.hpp"
#include "designforge/pi_value.hpp"
#include "designforge/point_set.hpp"

namespace designforge {

// Moment of x^alpha over the uniform probability measure on S^{d-1}:
// prod_i (alpha_i - 1)!! / (d(d+2)...(d+|alpha|-2)), zero if any alpha_i is
// odd. The k_i = 0 factors are empty products, (-1)!! = 1.
inline Rational sphere_moment(const MultiIndex& alpha, int d) {
    if (d < 1) throw Error("dimension must be >= 1");
    if (alpha.dimension() != d) throw Error("multi-index has wrong dimension");
    if (!alpha.all_even()) return Rational(0);
    int k = alpha.degree();
    Integer num = 1;
    for (int e : alpha.exponents) num *= double_factorial(e - 1);
    Integer den = 1;
    for (int j = 0; j + 2 <= k; j += 2) den *= (d + j);
    return make_rational(num, den);
}

// Moment of x^alpha over the Gaussian probability measure e^{-pi|x|^2} dx:
// prod_i (alpha_i - 1)!! * pi^{-|alpha|/2} / 2^{|alpha|/2}, zero for odd
// exponents. Carried exactly with pi-grading -|alpha|.
inline PiValue gaussian_moment(const MultiIndex& alpha) {
    if (!alpha.all_even()) return PiValue::zero();
    int k = alpha.degree();
    Integer num = 1;
    for (int e : alpha.exponents) num *= double_factorial(e - 1);
    Integer den = 1;
    den <<= (k / 2);  // 2^{k/2}
    return PiValue(make_rational(num, den), -k);
}

namespace detail {

// Gamma at a half-integer argument two_x/2, as rational * pi^{half/2}:
// Gamma(m) = (m-1)!, Gamma(m + 1/2) = (2m-1)!!/2^m * sqrt(pi).
inline PiValue gamma_half(int two_x) {
    if (two_x <= 0) throw Error("gamma_half needs a positive argument");
    if (two_x % 2 == 0) {
        return PiValue(Rational(factorial(two_x / 2 - 1)), 0);
    }
    int m = (two_x - 1) / 2;
    Integer den = 1;
    den <<= m;
    return PiValue(make_rational(double_factorial(2 * m - 1), den), 1);
}

}  // namespace detail

// k-th moment of the radial measure sigma_d r^{d-1} e^{-pi r^2} dr on
// [0, inf): Gamma((k+d)/2) / (Gamma(d/2) pi^{k/2}), evaluated exactly via
// the Gamma recurrence (never a floating Gamma).
inline PiValue radial_moment(int k, int d) {
    if (k < 0) throw Error("k must be >= 0");
    if (d < 1) throw Error("dimension must be >= 1");
    PiValue ratio = detail::gamma_half(k + d) / detail::gamma_half(d);
    return PiValue(ratio.coeff(), ratio.half_power() - k);
}

// All monomial moments |alpha| <= max_deg for one measure.
struct MomentTable {
    int d = 0;
    int max_deg = 0;
    Measure measure = Measure::Sphere;
    std::map<MultiIndex, PiValue> entries;

    static MomentTable build(Measure measure, int d, int max_deg) {
        MomentTable t;
        t.d = d;
        t.max_deg = max_deg;
        t.measure = measure;
        for (const auto& alpha : enumerate_multi_indices(d, max_deg)) {
            t.entries[alpha] = measure == Measure::Sphere
                                   ? PiValue(sphere_moment(alpha, d))
                                   : gaussian_moment(alpha);
        }
        return t;
    }

    const PiValue& at(const MultiIndex& alpha) const {
        auto it = entries.find(alpha);
        if (it == entries.end()) throw Error("moment not tabulated");
        return it->second;
    }
};

inline PiValue measure_moment(Measure measure, const MultiIndex& alpha, int d) {
    return measure == Measure::Sphere ? PiValue(sphere_moment(alpha, d))
                                      : gaussian_moment(alpha);
}

}  // namespace designforge
