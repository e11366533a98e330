#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "designforge/rational.hpp"

namespace designforge {

// Exact scalar of the form coeff * pi^(e/2). The half-integer grading covers
// every closed-form moment in this library: sphere moments are plain
// rationals (e = 0), Gaussian monomial moments carry pi^{-|alpha|/2} per
// pair of degrees, and radial moments of odd order pick up a stray sqrt(pi).
// Values of different grading never add; that is enforced, not coerced.
class PiValue {
public:
    PiValue() : coeff_(0), half_power_(0) {}
    PiValue(Rational coeff, int half_power)
        : coeff_(std::move(coeff)), half_power_(coeff_ == 0 ? 0 : half_power) {}
    /* implicit */ PiValue(const Rational& r) : coeff_(r), half_power_(0) {}

    static PiValue zero() { return PiValue(); }
    static PiValue one() { return PiValue(Rational(1), 0); }

    const Rational& coeff() const { return coeff_; }
    int half_power() const { return half_power_; }
    bool is_zero() const { return coeff_ == 0; }
    bool is_rational() const { return half_power_ == 0; }

    PiValue operator-() const { return PiValue(-coeff_, half_power_); }

    PiValue operator+(const PiValue& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (half_power_ != o.half_power_)
            throw Error("pi-graded addition of incompatible gradings " +
                        std::to_string(half_power_) + " and " +
                        std::to_string(o.half_power_));
        return PiValue(coeff_ + o.coeff_, half_power_);
    }

    PiValue operator-(const PiValue& o) const { return *this + (-o); }

    PiValue operator*(const PiValue& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return PiValue(coeff_ * o.coeff_, half_power_ + o.half_power_);
    }

    PiValue operator/(const PiValue& o) const {
        if (o.is_zero()) throw Error("division by zero PiValue");
        if (is_zero()) return zero();
        return PiValue(coeff_ / o.coeff_, half_power_ - o.half_power_);
    }

    bool operator==(const PiValue& o) const {
        return coeff_ == o.coeff_ && half_power_ == o.half_power_;
    }
    bool operator!=(const PiValue& o) const { return !(*this == o); }

    double to_double() const {
        return designforge::to_double(coeff_) *
               std::pow(std::numbers::pi, half_power_ / 2.0);
    }

    std::string to_string() const {
        if (is_rational()) return designforge::to_string(coeff_);
        std::ostringstream os;
        os << designforge::to_string(coeff_) << "*pi^(";
        if (half_power_ % 2 == 0)
            os << half_power_ / 2;
        else
            os << half_power_ << "/2";
        os << ")";
        return os.str();
    }

private:
    Rational coeff_;
    int half_power_;
};

// Rational-coefficient polynomial in u = 1/pi: sum_j coeffs[j] * pi^{-j}.
// The ring where pi-graded right-hand sides get solved and verified; only
// nonzero coefficients are stored.
class PiPoly {
public:
    PiPoly() = default;
    /* implicit */ PiPoly(const Rational& r) {
        if (r != 0) coeffs_[0] = r;
    }

    static PiPoly term(const Rational& c, int inv_pi_power) {
        if (inv_pi_power < 0)
            throw Error("PiPoly supports nonnegative powers of 1/pi only");
        PiPoly p;
        if (c != 0) p.coeffs_[inv_pi_power] = c;
        return p;
    }

    // Requires an even, nonpositive pi-grading (a polynomial in 1/pi).
    static PiPoly from_pi_value(const PiValue& v) {
        if (v.is_zero()) return PiPoly();
        if (v.half_power() % 2 != 0 || v.half_power() > 0)
            throw ExactUnsupported("value " + v.to_string() +
                                   " is not a polynomial in 1/pi");
        return term(v.coeff(), -v.half_power() / 2);
    }

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int j) const {
        auto it = coeffs_.find(j);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    PiPoly operator-() const {
        PiPoly p;
        for (const auto& [j, c] : coeffs_) p.coeffs_[j] = -c;
        return p;
    }

    PiPoly& operator+=(const PiPoly& o) {
        for (const auto& [j, c] : o.coeffs_) {
            Rational s = coeff(j) + c;
            if (s == 0)
                coeffs_.erase(j);
            else
                coeffs_[j] = s;
        }
        return *this;
    }

    PiPoly operator+(const PiPoly& o) const {
        PiPoly p = *this;
        p += o;
        return p;
    }
    PiPoly operator-(const PiPoly& o) const { return *this + (-o); }

    PiPoly operator*(const PiPoly& o) const {
        PiPoly p;
        for (const auto& [j1, c1] : coeffs_)
            for (const auto& [j2, c2] : o.coeffs_) {
                Rational s = p.coeff(j1 + j2) + c1 * c2;
                if (s == 0)
                    p.coeffs_.erase(j1 + j2);
                else
                    p.coeffs_[j1 + j2] = s;
            }
        return p;
    }

    PiPoly operator*(const Rational& r) const { return *this * PiPoly(r); }

    bool operator==(const PiPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const PiPoly& o) const { return !(*this == o); }

    double to_double() const {
        double u = 1.0 / std::numbers::pi, acc = 0.0;
        for (const auto& [j, c] : coeffs_)
            acc += designforge::to_double(c) * std::pow(u, j);
        return acc;
    }

    // "c0 + c1*u + c2*u^2" with zero terms skipped; "0" when empty.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [j, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            os << designforge::to_string(c);
            if (j == 1)
                os << "*u";
            else if (j > 1)
                os << "*u^" << j;
        }
        return os.str();
    }

private:
    std::map<int, Rational> coeffs_;
};

}  // namespace designforge
