#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "designforge/rational.hpp"

namespace designforge {

// Exponent vector alpha of a monomial x^alpha; length equals the ambient
// dimension d.
struct MultiIndex {
    std::vector<int> exponents;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : exponents(std::move(e)) {}

    int dimension() const { return static_cast<int>(exponents.size()); }
    int degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0);
    }
    int operator[](int i) const { return exponents[i]; }

    bool all_even() const {
        return std::all_of(exponents.begin(), exponents.end(),
                           [](int e) { return e % 2 == 0; });
    }

    auto operator<=>(const MultiIndex&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < dimension(); ++i) {
            if (i) s += ",";
            s += std::to_string(exponents[i]);
        }
        return s + ")";
    }
};

// All alpha with |alpha| <= max_deg in lexicographic order; exactly
// binom(d + max_deg, max_deg) of them.
inline std::vector<MultiIndex> enumerate_multi_indices(int d, int max_deg) {
    if (d < 1) throw Error("dimension must be >= 1");
    if (max_deg < 0) throw Error("max_deg must be >= 0");
    std::vector<MultiIndex> out;
    std::vector<int> cur(d, 0);
    auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == d) {
            out.emplace_back(cur);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur[pos] = e;
            self(self, pos + 1, budget - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, max_deg);
    return out;
}

}  // namespace designforge
