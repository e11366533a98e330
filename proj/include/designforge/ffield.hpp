#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "designforge/errors.hpp"
#include "designforge/rational.hpp"
#include "designforge/rng.hpp"

namespace designforge {

// Arithmetic in F_q for prime q directly and for prime powers via
// F_p[x]/(f) with a fixed irreducible-polynomial table. Elements are
// integers 0..q-1 whose base-p digits are the polynomial coefficients.
class GaloisField {
public:
    explicit GaloisField(int q) : q_(q) {
        if (q < 2) throw FieldUnsupported("field order must be >= 2");
        int p = smallest_prime_factor(q);
        int k = 0;
        int m = q;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m != 1)
            throw FieldUnsupported(std::to_string(q) + " is not a prime power");
        p_ = p;
        degree_ = k;
        if (k > 1) {
            auto it = irreducibles().find(q);
            if (it == irreducibles().end())
                throw FieldUnsupported("no irreducible polynomial configured for q = " +
                                       std::to_string(q));
            modulus_ = it->second;
        }
        build_tables();
    }

    int order() const { return q_; }
    int characteristic() const { return p_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const {
        if (a == 0) throw Error("division by zero field element");
        return inv_[a];
    }

private:
    static int smallest_prime_factor(int n) {
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) return p;
        return n;
    }

    // Irreducible monic polynomials over F_p, constant term first.
    static const std::map<int, std::vector<int>>& irreducibles() {
        static const std::map<int, std::vector<int>> table = {
            {4, {1, 1, 1}},        // x^2 + x + 1 over F_2
            {8, {1, 1, 0, 1}},     // x^3 + x + 1 over F_2
            {9, {2, 2, 1}},        // x^2 + 2x + 2 over F_3
            {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1 over F_2
            {25, {2, 4, 1}},       // x^2 + 4x + 2 over F_5
            {27, {1, 2, 0, 1}},    // x^3 + 2x + 1 over F_3
        };
        return table;
    }

    std::vector<int> digits(int v) const {
        std::vector<int> d(degree_, 0);
        for (int i = 0; i < degree_; ++i) {
            d[i] = v % p_;
            v /= p_;
        }
        return d;
    }

    int undigits(const std::vector<int>& d) const {
        int v = 0;
        for (int i = degree_ - 1; i >= 0; --i) v = v * p_ + d[i];
        return v;
    }

    void build_tables() {
        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        if (degree_ == 1) {
            for (int a = 0; a < q_; ++a) {
                neg_[a] = (q_ - a) % q_;
                for (int b = 0; b < q_; ++b) {
                    add_[a * q_ + b] = (a + b) % q_;
                    mul_[a * q_ + b] = (a * b) % q_;
                }
            }
        } else {
            for (int a = 0; a < q_; ++a) {
                auto da = digits(a);
                std::vector<int> dn(degree_);
                for (int i = 0; i < degree_; ++i) dn[i] = (p_ - da[i]) % p_;
                neg_[a] = undigits(dn);
                for (int b = 0; b < q_; ++b) {
                    auto db = digits(b);
                    std::vector<int> ds(degree_);
                    for (int i = 0; i < degree_; ++i) ds[i] = (da[i] + db[i]) % p_;
                    add_[a * q_ + b] = undigits(ds);
                    // polynomial product reduced mod the irreducible
                    std::vector<int> prod(2 * degree_ - 1, 0);
                    for (int i = 0; i < degree_; ++i)
                        for (int j = 0; j < degree_; ++j)
                            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                    for (int i = 2 * degree_ - 2; i >= degree_; --i) {
                        int c = prod[i];
                        if (c == 0) continue;
                        prod[i] = 0;
                        for (int j = 0; j < degree_; ++j) {
                            int delta = (c * modulus_[j]) % p_;
                            int idx = i - degree_ + j;
                            prod[idx] = ((prod[idx] - delta) % p_ + p_) % p_;
                        }
                    }
                    std::vector<int> dm(prod.begin(), prod.begin() + degree_);
                    mul_[a * q_ + b] = undigits(dm);
                }
            }
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul(a, b) == 1) {
                    inv_[a] = b;
                    break;
                }
    }

    int q_, p_ = 0, degree_ = 1;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

// Vector over F_q, entries 0..q-1.
struct FqVector {
    int q = 2;
    std::vector<int> entries;
};

// Multiset of rows in {0..q-1}^d.
struct SymbolArray {
    int q = 2;
    int d = 0;
    std::vector<std::vector<int>> rows;

    int size() const { return static_cast<int>(rows.size()); }
};

namespace detail {

// Rank of the row span of `rows` over F_q by Gaussian elimination.
inline int fq_rank(const GaloisField& F, std::vector<std::vector<int>> rows) {
    int rank = 0;
    int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = F.inv(rows[rank][c]);
        for (int j = c; j < cols; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            int f = rows[r][c];
            for (int j = c; j < cols; ++j)
                rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

// Is v in the span of `basis`?
inline bool in_span(const GaloisField& F, const std::vector<std::vector<int>>& basis,
                    const std::vector<int>& v) {
    auto rows = basis;
    int r0 = fq_rank(F, rows);
    rows.push_back(v);
    return fq_rank(F, rows) == r0;
}

inline std::vector<int> int_to_vector(int x, int r, int q) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) {
        v[i] = x % q;
        x /= q;
    }
    return v;
}

}  // namespace detail

// Greedy construction of S in F_q^r whose dependent subsets all have size
// > t: over a seeded random ordering of the nonzero vectors, v joins S iff
// v is outside the span of every (t-1)-subset of the current S. The result
// is maximal for the ordering.
inline std::vector<FqVector> independent_vector_set(int q, int r, int t,
                                                    std::uint64_t seed) {
    if (r < 1) throw Error("r must be >= 1");
    if (t < 2) throw Error("t must be >= 2");
    GaloisField F(q);

    long long total = 1;
    for (int i = 0; i < r; ++i) {
        total *= q;
        if (total > 20'000'000) throw TooLarge("q^r too large to enumerate");
    }

    std::vector<int> order(total - 1);
    std::iota(order.begin(), order.end(), 1);
    Rng rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.index(i)]);

    std::vector<std::vector<int>> S;
    const int m = t - 1;
    std::vector<int> choose;
    for (int idx : order) {
        auto v = detail::int_to_vector(idx, r, q);
        int take = std::min<int>(m, static_cast<int>(S.size()));
        bool dependent = false;
        // every subset of size `take` (supersets cover smaller ones)
        std::vector<int> sel(take);
        std::iota(sel.begin(), sel.end(), 0);
        while (true) {
            std::vector<std::vector<int>> basis;
            for (int s : sel) basis.push_back(S[s]);
            if (detail::in_span(F, basis, v)) {
                dependent = true;
                break;
            }
            // next combination
            int i = take - 1;
            while (i >= 0 &&
                   sel[i] == static_cast<int>(S.size()) - take + i)
                --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < take; ++j) sel[j] = sel[j - 1] + 1;
        }
        if (!dependent) S.push_back(v);
    }

    std::vector<FqVector> out;
    out.reserve(S.size());
    for (auto& v : S) out.push_back(FqVector{q, std::move(v)});
    return out;
}

// Rows phi_x = (<x, s>)_{s in S} for every x in F_q^r, in the integer order
// of x. |S| columns, q^r rows.
inline SymbolArray dual_family(const std::vector<FqVector>& S, int q, int r) {
    if (S.empty()) throw Error("S must be nonempty");
    GaloisField F(q);
    long long total = 1;
    for (int i = 0; i < r; ++i) {
        total *= q;
        if (total > 20'000'000) throw TooLarge("q^r too large to enumerate");
    }
    SymbolArray a;
    a.q = q;
    a.d = static_cast<int>(S.size());
    a.rows.reserve(total);
    for (long long x = 0; x < total; ++x) {
        auto xv = detail::int_to_vector(static_cast<int>(x), r, q);
        std::vector<int> row(a.d);
        for (int j = 0; j < a.d; ++j) {
            int acc = 0;
            for (int i = 0; i < r; ++i)
                acc = F.add(acc, F.mul(xv[i], S[j].entries[i]));
            row[j] = acc;
        }
        a.rows.push_back(std::move(row));
    }
    return a;
}

// t-wise independent multiset in {0..q-1}^d with at most (8qd)^{t-1} rows:
// least r whose greedy independent set reaches d vectors, truncated to d,
// pushed through dual_family.
inline SymbolArray twise_construct(int q, int d, int t, std::uint64_t seed) {
    if (d < 1) throw Error("d must be >= 1");
    if (t < 2) throw Error("t must be >= 2");
    GaloisField probe(q);  // validates q early
    (void)probe;

    double budget = std::pow(8.0 * q * d, t - 1);
    int r_cap = static_cast<int>(
        std::ceil(8.0 * (t - 1) * std::log(8.0 * q * d) / std::log(double(q))));
    for (int r = 1; r <= r_cap; ++r) {
        if (std::pow(double(q), r) > budget) break;
        auto S = independent_vector_set(q, r, t, derive_seed(seed, r));
        if (static_cast<int>(S.size()) >= d) {
            S.resize(d);
            return dual_family(S, q, r);
        }
    }
    throw GiveUp("no r with q^r <= (8qd)^(t-1) gives " + std::to_string(d) +
                 " t-wise independent vectors");
}

// Exhaustive t-wise independence check: every coordinate subset I with
// |I| <= t must see each pattern exactly |X| / q^|I| times.
struct TwiseCounterexample {
    std::vector<int> positions;
    std::vector<int> pattern;
    long long count = 0;
};

inline std::optional<TwiseCounterexample> twise_verify(const SymbolArray& X, int t) {
    if (t < 0) throw Error("t must be >= 0");
    const int d = X.d;
    const long long n = X.size();
    for (int k = 1; k <= std::min(t, d); ++k) {
        long long patterns = 1;
        for (int i = 0; i < k; ++i) patterns *= X.q;
        if (patterns > 50'000'000) throw TooLarge("q^|I| too large to tabulate");
        std::vector<int> sel(k);
        std::iota(sel.begin(), sel.end(), 0);
        while (true) {
            std::vector<long long> counts(patterns, 0);
            for (const auto& row : X.rows) {
                long long code = 0;
                for (int i = 0; i < k; ++i) code = code * X.q + row[sel[i]];
                ++counts[code];
            }
            // uniformity: every pattern exactly n / q^k times
            if (n % patterns != 0) {
                TwiseCounterexample ce;
                ce.positions = sel;
                ce.pattern.assign(k, 0);
                ce.count = counts[0];
                return ce;
            }
            long long expect = n / patterns;
            for (long long code = 0; code < patterns; ++code) {
                if (counts[code] != expect) {
                    TwiseCounterexample ce;
                    ce.positions = sel;
                    ce.pattern.resize(k);
                    long long c = code;
                    for (int i = k - 1; i >= 0; --i) {
                        ce.pattern[i] = static_cast<int>(c % X.q);
                        c /= X.q;
                    }
                    ce.count = counts[code];
                    return ce;
                }
            }
            int i = k - 1;
            while (i >= 0 && sel[i] == d - k + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// Largest s with binom(s, t/2) <= q^r; t must be even.
inline long independent_set_upper_bound(int q, int r, int t) {
    if (t < 2 || t % 2 != 0) throw OddT("t must be even and >= 2");
    Integer qr = 1;
    for (int i = 0; i < r; ++i) qr *= q;
    long h = t / 2;
    long s = h;
    while (binomial(s + 1, h) <= qr) ++s;
    return s;
}

// ---- array file format ----
//   array v1
//   q: <q>
//   d: <d>
//   rows: <n>
//   <row as base-36 digit string> x n

namespace detail {

inline char symbol_char(int v) {
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

inline int symbol_value(char c, int line) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    throw ParseError(line, std::string("bad symbol '") + c + "'");
}

}  // namespace detail

inline void write_array(const SymbolArray& a, std::ostream& out) {
    out << "array v1\n";
    out << "q: " << a.q << "\n";
    out << "d: " << a.d << "\n";
    out << "rows: " << a.size() << "\n";
    for (const auto& row : a.rows) {
        for (int v : row) out << detail::symbol_char(v);
        out << "\n";
    }
}

inline void write_array(const SymbolArray& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_array(a, out);
}

inline SymbolArray read_array(std::istream& in) {
    std::string l;
    int ln = 1;
    auto get = [&]() {
        if (!std::getline(in, l)) throw ParseError(ln, "unexpected end of file");
        if (!l.empty() && l.back() == '\r') l.pop_back();
        return l;
    };
    if (get() != "array v1") throw ParseError(1, "malformed header (want 'array v1')");
    SymbolArray a;
    auto field = [&](const char* key) {
        ++ln;
        std::string s = get();
        std::string prefix = std::string(key) + ": ";
        if (s.rfind(prefix, 0) != 0)
            throw ParseError(ln, "expected '" + std::string(key) + ":' field");
        return std::stoi(s.substr(prefix.size()));
    };
    a.q = field("q");
    a.d = field("d");
    int n = field("rows");
    for (int i = 0; i < n; ++i) {
        ++ln;
        std::string s = get();
        if (static_cast<int>(s.size()) != a.d)
            throw ParseError(ln, "row has wrong length");
        std::vector<int> row(a.d);
        for (int j = 0; j < a.d; ++j) {
            row[j] = detail::symbol_value(s[j], ln);
            if (row[j] >= a.q) throw ParseError(ln, "symbol out of range");
        }
        a.rows.push_back(std::move(row));
    }
    return a;
}

inline SymbolArray read_array(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_array(in);
}

}  // namespace designforge
