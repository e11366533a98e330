#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "designforge/ffield.hpp"
#include "designforge/gegenbauer.hpp"
#include "designforge/moments.hpp"
#include "designforge/point_set.hpp"
#include "designforge/quad1d.hpp"
#include "designforge/rng.hpp"
#include "designforge/verify.hpp"

namespace designforge {

// ---- cross-polytope ----

// Vertices ±e_i with uniform weights 1/(2d); an exact spherical 3-design.
inline WeightedPointSet cross_polytope(int d) {
    if (d < 1) throw Error("dimension must be >= 1");
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> ws;
    for (int i = 0; i < d; ++i) {
        for (int sign : {+1, -1}) {
            std::vector<Rational> p(d, Rational(0));
            p[i] = Rational(sign);
            pts.push_back(std::move(p));
            ws.push_back(make_rational(1, 2 * d));
        }
    }
    return WeightedPointSet::from_rationals(Measure::Sphere, Kind::Unweighted, d,
                                            pts, ws, 3);
}

// ---- pool fitting and Caratheodory pruning ----

namespace detail {

inline Eigen::MatrixXd moment_matrix(const std::vector<std::vector<double>>& pts,
                                     const std::vector<MultiIndex>& alphas) {
    Eigen::MatrixXd A(alphas.size(), pts.size());
    for (std::size_t r = 0; r < alphas.size(); ++r)
        for (std::size_t c = 0; c < pts.size(); ++c) {
            double v = 1.0;
            for (std::size_t j = 0; j < pts[c].size(); ++j)
                for (int e = 0; e < alphas[r][static_cast<int>(j)]; ++e)
                    v *= pts[c][j];
            A(r, c) = v;
        }
    return A;
}

// Lawson-Hanson active-set nonnegative least squares.
inline Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    const int n = static_cast<int>(A.cols());
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    std::vector<bool> active(n, false);
    Eigen::VectorXd resid = b;
    const double tol = 1e-12 * b.norm();

    for (int outer = 0; outer < 3 * n + 10; ++outer) {
        Eigen::VectorXd grad = A.transpose() * resid;
        int best = -1;
        double best_g = tol;
        for (int i = 0; i < n; ++i)
            if (!active[i] && grad(i) > best_g) {
                best_g = grad(i);
                best = i;
            }
        if (best < 0) break;
        active[best] = true;

        for (int inner = 0; inner < 3 * n + 10; ++inner) {
            std::vector<int> P;
            for (int i = 0; i < n; ++i)
                if (active[i]) P.push_back(i);
            Eigen::MatrixXd AP(A.rows(), P.size());
            for (std::size_t c = 0; c < P.size(); ++c) AP.col(c) = A.col(P[c]);
            Eigen::VectorXd z = AP.colPivHouseholderQr().solve(b);

            double zmin = z.size() ? z.minCoeff() : 1.0;
            if (zmin > 0) {
                for (std::size_t c = 0; c < P.size(); ++c) w(P[c]) = z(c);
                break;
            }
            double step = 1.0;
            for (std::size_t c = 0; c < P.size(); ++c)
                if (z(c) <= 0) {
                    double wi = w(P[c]);
                    step = std::min(step, wi / (wi - z(c)));
                }
            for (std::size_t c = 0; c < P.size(); ++c) {
                w(P[c]) += step * (z(c) - w(P[c]));
                if (w(P[c]) <= 1e-14) {
                    w(P[c]) = 0.0;
                    active[P[c]] = false;
                }
            }
        }
        resid = b - A * w;
    }
    return w;
}

}  // namespace detail

// Nonnegative least-squares fit of pool weights to the measure's moments up
// to strength s. FitFailed when the residual cannot be brought under 1e-9.
inline WeightedPointSet fit_weights_on_pool(const std::vector<std::vector<double>>& pool,
                                            Measure measure, int d, int s) {
    if (pool.empty()) throw FitFailed("empty pool");
    auto alphas = enumerate_multi_indices(d, s);
    if (pool.size() < alphas.size())
        throw FitFailed("pool smaller than the number of moment functionals");

    Eigen::MatrixXd A = detail::moment_matrix(pool, alphas);
    Eigen::VectorXd b(alphas.size());
    for (std::size_t r = 0; r < alphas.size(); ++r)
        b(r) = measure_moment(measure, alphas[r], d).to_double();

    Eigen::VectorXd w = detail::nnls(A, b);
    double resid = (A * w - b).lpNorm<Eigen::Infinity>();
    if (resid > 1e-9)
        throw FitFailed("moment residual " + std::to_string(resid) +
                        " exceeds 1e-9; pool too degenerate");

    std::vector<std::vector<double>> pts;
    std::vector<double> ws;
    for (int i = 0; i < w.size(); ++i)
        if (w(i) > 0) {
            pts.push_back(pool[i]);
            ws.push_back(w(i));
        }
    return WeightedPointSet::from_doubles(measure, Kind::Weighted, d, pts, ws, s);
}

struct PruneResult {
    WeightedPointSet set;
    bool stalled = false;
};

namespace detail {

// One nonzero rational kernel vector of A (rows x cols), or empty.
inline std::vector<Rational> rational_kernel_vector(
    std::vector<std::vector<Rational>> A, int cols) {
    int rows = static_cast<int>(A.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (A[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[r], A[piv]);
        Rational inv = Rational(1) / A[r][c];
        for (int j = c; j < cols; ++j) A[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::set<int> pivots(pivot_col.begin(), pivot_col.end());
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!pivots.count(c)) {
            free_col = c;
            break;
        }
    if (free_col < 0) return {};
    std::vector<Rational> kernel(cols, Rational(0));
    kernel[free_col] = Rational(1);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
        kernel[pivot_col[i]] = -A[i][free_col];
    return kernel;
}

}  // namespace detail

// Support reduction of a weighted moment-matching set to at most
// dim(P_s^measure) points: repeatedly step along a null direction of the
// moment matrix until a weight hits zero. Float sets use an SVD null vector;
// exact rational sets are pruned in exact arithmetic and keep their moments
// bit for bit.
inline PruneResult caratheodory_prune(const WeightedPointSet& X, int s) {
    if (X.kind == Kind::Signed)
        throw Error("pruning requires nonnegative weights");
    const int d = X.dimension;
    auto alphas = enumerate_multi_indices(d, s);
    long target = to_long(X.measure == Measure::Sphere ? dim_P_sphere(d, s)
                                                       : dim_P_gaussian(d, s));
    PruneResult result;

    if (X.exact_mode()) {
        std::vector<std::vector<Rational>> pts;
        std::vector<Rational> ws;
        for (int i = 0; i < X.size(); ++i) {
            std::vector<Rational> p;
            for (int j = 0; j < d; ++j) {
                const PiValue& v = X.points[i][j].exact_value();
                if (!v.is_rational())
                    throw ExactUnsupported("exact pruning needs rational coordinates");
                p.push_back(v.coeff());
            }
            pts.push_back(std::move(p));
            if (!X.weights[i].exact_value().is_rational())
                throw ExactUnsupported("exact pruning needs rational weights");
            ws.push_back(X.weights[i].exact_value().coeff());
        }

        while (static_cast<long>(pts.size()) > target) {
            int k = static_cast<int>(pts.size());
            std::vector<std::vector<Rational>> A(alphas.size(),
                                                 std::vector<Rational>(k));
            for (std::size_t r = 0; r < alphas.size(); ++r)
                for (int c = 0; c < k; ++c) {
                    Rational v(1);
                    for (int j = 0; j < d; ++j)
                        for (int e = 0; e < alphas[r][j]; ++e) v *= pts[c][j];
                    A[r][c] = v;
                }
            auto kernel = detail::rational_kernel_vector(std::move(A), k);
            if (kernel.empty()) break;  // support is already independent
            bool has_positive = false;
            for (const auto& c : kernel)
                if (c > 0) has_positive = true;
            if (!has_positive)
                for (auto& c : kernel) c = -c;
            int arg = -1;
            Rational theta(0);
            for (int i = 0; i < k; ++i) {
                if (kernel[i] <= 0) continue;
                Rational ratio = ws[i] / kernel[i];
                if (arg < 0 || ratio < theta) {
                    theta = ratio;
                    arg = i;
                }
            }
            std::vector<std::vector<Rational>> np;
            std::vector<Rational> nw;
            for (int i = 0; i < k; ++i) {
                Rational w = ws[i] - theta * kernel[i];
                if (i == arg || w == 0) continue;
                np.push_back(pts[i]);
                nw.push_back(w);
            }
            pts = std::move(np);
            ws = std::move(nw);
        }
        result.set = WeightedPointSet::from_rationals(X.measure, Kind::Weighted, d,
                                                      pts, ws, s);
        result.stalled = static_cast<long>(pts.size()) > target;
        return result;
    }

    std::vector<std::vector<double>> pts;
    std::vector<double> ws;
    for (int i = 0; i < X.size(); ++i) {
        pts.push_back(X.point_as_doubles(i));
        ws.push_back(X.weight(i));
    }
    while (static_cast<long>(pts.size()) > target) {
        Eigen::MatrixXd A = detail::moment_matrix(pts, alphas);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        // a wide matrix always has a kernel; a tall one only via a
        // negligible singular value
        bool has_kernel =
            A.cols() > A.rows() ||
            sv(sv.size() - 1) <= 1e-7 * std::max(1.0, sv(0));
        if (!has_kernel) {
            result.stalled = true;  // numerically full column rank
            break;
        }
        Eigen::VectorXd c = svd.matrixV().col(svd.matrixV().cols() - 1);
        if (c.maxCoeff() < -c.minCoeff()) c = -c;
        int arg = -1;
        double theta = 0.0;
        for (int i = 0; i < c.size(); ++i) {
            if (c(i) <= 1e-13) continue;
            double ratio = ws[i] / c(i);
            if (arg < 0 || ratio < theta) {
                theta = ratio;
                arg = i;
            }
        }
        if (arg < 0) {
            result.stalled = true;
            break;
        }
        std::vector<std::vector<double>> np;
        std::vector<double> nw;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double w = ws[i] - theta * c(static_cast<int>(i));
            if (static_cast<int>(i) == arg || w <= 1e-14) continue;
            np.push_back(pts[i]);
            nw.push_back(w);
        }
        if (np.size() == pts.size()) {
            result.stalled = true;  // no weight was driven to zero
            break;
        }
        pts = std::move(np);
        ws = std::move(nw);
    }
    result.set =
        WeightedPointSet::from_doubles(X.measure, Kind::Weighted, d, pts, ws, s);
    return result;
}

// ---- unweighted Gaussian product design ----

struct ProductDesign {
    WeightedPointSet set;
    SymbolArray array;
    std::vector<double> line_design;  // the 1-D design the symbols map onto
};

// Rows of a t-wise independent array with symbols sent through a 1-D
// unweighted Gaussian t-design: an unweighted Gaussian t-design in R^d
// with at most (8qd)^{t-1} points.
inline ProductDesign gaussian_product_design(int d, int t, int q,
                                             std::uint64_t seed) {
    auto line = unweighted_1d_gaussian_design(t, q, derive_seed(seed, 101));
    if (!line)
        throw NoSolution("no unweighted 1-D Gaussian " + std::to_string(t) +
                         "-design on " + std::to_string(q) + " points found");
    ProductDesign out;
    out.line_design = *line;
    out.array = twise_construct(q, d, t, derive_seed(seed, 202));

    std::vector<std::vector<double>> pts;
    pts.reserve(out.array.size());
    for (const auto& row : out.array.rows) {
        std::vector<double> p(d);
        for (int j = 0; j < d; ++j) p[j] = out.line_design[row[j]];
        pts.push_back(std::move(p));
    }
    std::vector<double> ws(pts.size(), 1.0 / pts.size());
    out.set = WeightedPointSet::from_doubles(Measure::Gaussian, Kind::Unweighted,
                                             d, pts, ws, t);
    return out;
}

// ---- partitions and sign-symmetric orbits ----

// Weakly decreasing positive parts summing to at most t.
struct Partition {
    std::vector<int> parts;

    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int count() const { return static_cast<int>(parts.size()); }

    // Zero-padded exponent vector in R^d, doubled: partition (2,1) -> (4,2,0,..).
    MultiIndex doubled_multi_index(int d) const {
        std::vector<int> e(d, 0);
        for (std::size_t i = 0; i < parts.size(); ++i) e[i] = 2 * parts[i];
        return MultiIndex(std::move(e));
    }

    std::string to_string() const {
        if (parts.empty()) return "()";
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

// Number of partitions of exactly n.
inline long partition_count(int n) {
    if (n < 0) return 0;
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    return p[n];
}

// Partitions of the integers 0..t into at most d parts, graded
// lexicographic: by total, then largest-part-first order within a total.
inline std::vector<Partition> partitions_up_to(int t, int d) {
    if (t < 0) throw Error("t must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition{cur});
            return;
        }
        if (static_cast<int>(cur.size()) >= d) return;
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    for (int n = 0; n <= t; ++n) rec(rec, n, n);
    return out;
}

// Orbit of a_1 e_1 + ... + a_t e_t under coordinate permutations and sign
// flips, multiplicities divided by (d-t)!: one point per (sign vector,
// injection of [t] into [d]) pair, 2^t d!/(d-t)! in total.
template <class T>
std::map<std::vector<T>, long long> orbit_points(const std::vector<T>& a, int d) {
    const int t = static_cast<int>(a.size());
    if (t > d) throw TooManyParts("orbit needs t <= d");
    std::map<std::vector<T>, long long> orbit;

    std::vector<int> slot(t, 0);
    std::vector<bool> used(d, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == t) {
            for (int mask = 0; mask < (1 << t); ++mask) {
                std::vector<T> p(d, T{});
                for (int j = 0; j < t; ++j)
                    p[slot[j]] = (mask >> j) & 1 ? T{} - a[j] : a[j];
                ++orbit[p];
            }
            return;
        }
        for (int c = 0; c < d; ++c) {
            if (used[c]) continue;
            used[c] = true;
            slot[i] = c;
            self(self, i + 1);
            used[c] = false;
        }
    };
    rec(rec, 0);
    return orbit;
}

namespace detail {

// sum_{y in orbit} y^alpha for even alpha, computed over the ring holding
// the squared generator entries: 2^t (d-s)!/(d-t)! times the sum over
// ordered injections of the support into [t] of the matching power products.
template <class R>
R orbit_moment_core(const MultiIndex& alpha, const std::vector<R>& a_squared,
                    int d) {
    const int t = static_cast<int>(a_squared.size());
    std::vector<int> support, half_exp;
    for (int j = 0; j < alpha.dimension(); ++j)
        if (alpha[j] != 0) {
            support.push_back(j);
            half_exp.push_back(alpha[j] / 2);
        }
    const int s = static_cast<int>(support.size());
    if (s > t) return R{};

    R inner{};
    std::vector<int> pick(s, 0);
    std::vector<bool> used(t, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == s) {
            R term = R(Rational(1));
            for (int j = 0; j < s; ++j)
                for (int e = 0; e < half_exp[j]; ++e)
                    term = term * a_squared[pick[j]];
            inner += term;
            return;
        }
        for (int g = 0; g < t; ++g) {
            if (used[g]) continue;
            used[g] = true;
            pick[i] = g;
            self(self, i + 1);
            used[g] = false;
        }
    };
    if (s == 0)
        inner = R(Rational(1));
    else
        rec(rec, 0);

    Integer coef = falling_factorial(d - s, t - s);  // (d-s)!/(d-t)!
    Integer two_t = 1;
    two_t <<= t;
    return inner * R(Rational(coef * two_t));
}

}  // namespace detail

// b_alpha(a): the monomial sum over the orbit of a, exact and computed
// combinatorially (no materialization). Zero for any odd exponent.
inline Rational orbit_moment(const MultiIndex& alpha, const std::vector<Rational>& a,
                             int d) {
    const int t = static_cast<int>(a.size());
    if (t > d) throw TooManyParts("orbit needs t <= d");
    if (!alpha.all_even()) return Rational(0);
    std::vector<Rational> sq;
    sq.reserve(a.size());
    for (const auto& ai : a) sq.push_back(ai * ai);
    return detail::orbit_moment_core<Rational>(alpha, sq, d);
}

// Same sum over a ring of pi-graded values, for generators whose squares
// are only exact as elements of Q[1/pi].
inline PiPoly orbit_moment_pi(const MultiIndex& alpha,
                              const std::vector<PiPoly>& a_squared, int d) {
    if (static_cast<int>(a_squared.size()) > d)
        throw TooManyParts("orbit needs t <= d");
    if (!alpha.all_even()) return PiPoly();
    return detail::orbit_moment_core<PiPoly>(alpha, a_squared, d);
}

// ---- optimal signed designs ----

// Weighted union of sign-symmetric orbits: generators in R^t with exact
// rational entries, weights solved exactly against the measure's moments.
// Strength 2t.
struct OrbitDesign {
    int dimension = 1;
    int t = 0;
    Measure measure = Measure::Gaussian;
    int strength = 0;
    std::vector<std::vector<Rational>> generators;
    std::vector<PiPoly> weights;  // rational constants for the sphere measure

    long long materialized_size() const {
        long long total = 0;
        Integer per = falling_factorial(dimension, t);
        Integer two_t = 1;
        two_t <<= t;
        per *= two_t;
        total = static_cast<long long>(generators.size()) * to_long(per);
        return total;
    }
};

namespace detail {

// Solve B x = M exactly for several right-hand sides (columns of M).
// Returns false when B is singular.
inline bool rational_solve(std::vector<std::vector<Rational>> B,
                           std::vector<std::vector<Rational>> M,
                           std::vector<std::vector<Rational>>& out) {
    const int n = static_cast<int>(B.size());
    const int m = M.empty() ? 0 : static_cast<int>(M[0].size());
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (B[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(B[c], B[piv]);
        std::swap(M[c], M[piv]);
        Rational inv = Rational(1) / B[c][c];
        for (int j = c; j < n; ++j) B[c][j] *= inv;
        for (int j = 0; j < m; ++j) M[c][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || B[r][c] == 0) continue;
            Rational f = B[r][c];
            for (int j = c; j < n; ++j) B[r][j] -= f * B[c][j];
            for (int j = 0; j < m; ++j) M[r][j] -= f * M[c][j];
        }
    }
    out = std::move(M);
    return true;
}

}  // namespace detail

// Signed design for any moment functional on doubled partitions; the
// measure only needs to be symmetric under coordinate permutations and
// negations. The functional returns the exact moment of x^{2 alpha}.
template <class MomentFn>
OrbitDesign signed_design_custom(int d, int t, Measure measure, MomentFn&& moment_of,
                                 std::uint64_t seed, int max_retries = 100) {
    if (t > d) throw TooManyParts("signed design needs t <= d");
    if (t < 0) throw Error("t must be >= 0");
    auto P = partitions_up_to(t, d);
    const int n = static_cast<int>(P.size());

    OrbitDesign design;
    design.dimension = d;
    design.t = t;
    design.measure = measure;
    design.strength = 2 * t;

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        std::vector<std::vector<Rational>> gens(n);
        for (auto& g : gens) {
            g.resize(t);
            for (auto& e : g)
                e = make_rational(8 + static_cast<long>(rng.index(25)), 16);
        }

        // B[i][j] = b_{2 P_i}(a_j)
        std::vector<std::vector<Rational>> B(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i) {
            MultiIndex alpha = P[i].doubled_multi_index(d);
            for (int j = 0; j < n; ++j) B[i][j] = orbit_moment(alpha, gens[j], d);
        }

        // RHS split by powers of u = 1/pi.
        std::vector<PiPoly> rhs(n);
        std::set<int> powers;
        for (int i = 0; i < n; ++i) {
            rhs[i] = moment_of(P[i]);
            for (const auto& [p, c] : rhs[i].coeffs()) powers.insert(p);
        }
        std::vector<int> power_list(powers.begin(), powers.end());
        std::vector<std::vector<Rational>> M(n,
                                             std::vector<Rational>(power_list.size()));
        for (int i = 0; i < n; ++i)
            for (std::size_t c = 0; c < power_list.size(); ++c)
                M[i][c] = rhs[i].coeff(power_list[c]);

        std::vector<std::vector<Rational>> sol;
        if (!detail::rational_solve(B, M, sol)) continue;

        design.generators = std::move(gens);
        design.weights.assign(n, PiPoly());
        for (int j = 0; j < n; ++j)
            for (std::size_t c = 0; c < power_list.size(); ++c)
                design.weights[j] += PiPoly::term(sol[j][c], power_list[c]);
        return design;
    }
    throw SingularAfterRetries("no invertible orbit-moment matrix after " +
                               std::to_string(max_retries) + " resamples");
}

// The two built-in measures: Gaussian right-hand sides are pi-graded, so
// weights come out in Q[1/pi]; spherical ones are rational.
inline OrbitDesign signed_design(int d, int t, Measure measure, std::uint64_t seed) {
    return signed_design_custom(
        d, t, measure,
        [&](const Partition& p) {
            MultiIndex alpha = p.doubled_multi_index(d);
            return PiPoly::from_pi_value(measure_moment(measure, alpha, d));
        },
        seed);
}

// Exact verification of an orbit design at its claimed strength: monomials
// with an odd exponent vanish structurally on every orbit; the all-even
// ones are checked as identities in Q[1/pi].
struct OrbitVerification {
    bool pass = true;
    std::optional<MultiIndex> failing_monomial;
};

inline OrbitVerification verify_orbit_design(const OrbitDesign& design,
                                             int strength) {
    OrbitVerification rep;
    const int d = design.dimension;
    for (const auto& alpha : enumerate_multi_indices(d, strength)) {
        PiPoly lhs;
        if (alpha.all_even()) {
            for (std::size_t j = 0; j < design.generators.size(); ++j)
                lhs += design.weights[j] *
                       PiPoly(orbit_moment(alpha, design.generators[j], d));
        }  // else: structurally zero on both sides
        PiPoly target =
            PiPoly::from_pi_value(measure_moment(design.measure, alpha, d));
        if (lhs != target) {
            rep.pass = false;
            rep.failing_monomial = alpha;
            return rep;
        }
    }
    return rep;
}

// Odd-exponent monomials of any degree average to zero on orbit unions;
// checked via the exact orbit sums up to the cap.
inline OrbitVerification verify_orbit_odd_vanishing(const OrbitDesign& design,
                                                    int degree_cap) {
    OrbitVerification rep;
    const int d = design.dimension;
    for (const auto& alpha : enumerate_multi_indices(d, degree_cap)) {
        if (alpha.all_even()) continue;
        PiPoly lhs;
        for (std::size_t j = 0; j < design.generators.size(); ++j)
            lhs += design.weights[j] *
                   PiPoly(orbit_moment(alpha, design.generators[j], d));
        if (!lhs.is_zero()) {
            rep.pass = false;
            rep.failing_monomial = alpha;
            return rep;
        }
    }
    return rep;
}

// Float materialization of the orbit union as an explicit signed set.
inline WeightedPointSet materialize_orbit_design(const OrbitDesign& design) {
    std::vector<std::vector<double>> pts;
    std::vector<double> ws;
    const int d = design.dimension;
    for (std::size_t j = 0; j < design.generators.size(); ++j) {
        std::vector<double> a(design.t);
        for (int i = 0; i < design.t; ++i)
            a[i] = to_double(design.generators[j][i]);
        double w = design.weights[j].to_double();
        for (const auto& [p, mult] : orbit_points<double>(a, d)) {
            pts.push_back(p);
            ws.push_back(w * mult);
        }
    }
    return WeightedPointSet::from_doubles(design.measure, Kind::Signed, d, pts, ws,
                                          design.strength);
}

// ---- reflection families ----

struct ReflectionCheck {
    bool pass = true;
    std::vector<int> failing_tuple;
    Rational expectation = Rational(0);
};

// Mean-zero condition for weighted sign vectors: the expectation of every
// product of at most 2t distinct coordinates must vanish.
inline ReflectionCheck reflection_family_check(
    const std::vector<std::vector<int>>& E, const std::vector<Rational>& probs,
    int t) {
    if (E.empty()) throw Error("empty reflection family");
    if (E.size() != probs.size()) throw Error("probability vector length mismatch");
    Rational sum(0);
    for (const auto& p : probs) sum += p;
    if (sum != 1) throw Error("probabilities must sum to 1");
    const int d = static_cast<int>(E[0].size());

    ReflectionCheck rep;
    for (int r = 1; r <= std::min(2 * t, d); ++r) {
        std::vector<int> sel(r);
        std::iota(sel.begin(), sel.end(), 0);
        while (true) {
            Rational e(0);
            for (std::size_t j = 0; j < E.size(); ++j) {
                int prod = 1;
                for (int i : sel) prod *= E[j][i];
                e += probs[j] * prod;
            }
            if (e != 0) {
                rep.pass = false;
                rep.failing_tuple = sel;
                rep.expectation = e;
                return rep;
            }
            int i = r - 1;
            while (i >= 0 && sel[i] == d - r + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
        }
    }
    return rep;
}

// Any family satisfying the mean-zero condition has at least binom(d,t)
// reflections.
inline Integer reflection_lower_bound(int d, int t) { return binomial(d, t); }

}  // namespace designforge
