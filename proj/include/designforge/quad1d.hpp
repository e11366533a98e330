#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "designforge/errors.hpp"
#include "designforge/moments.hpp"
#include "designforge/rng.hpp"

namespace designforge {

// One-dimensional quadrature rule: positive weights summing to 1 that
// reproduce the target moments 0..matched_degree.
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
    int matched_degree = 0;

    int size() const { return static_cast<int>(nodes.size()); }

    double moment(int k) const {
        double acc = 0.0, c = 0.0;
        for (int i = 0; i < size(); ++i) {
            double y = weights[i] * std::pow(nodes[i], k) - c;
            double t = acc + y;
            c = (t - acc) - y;
            acc = t;
        }
        return acc;
    }
};

// n-point Gauss rule for an arbitrary moment sequence m_0..m_{2n-1} with
// m_0 = 1. The Chebyshev algorithm turns moments into the three-term
// recurrence; the Jacobi matrix eigensystem gives nodes and weights
// (Golub-Welsch). Throws HankelNotPD when the sequence is not the moment
// sequence of a positive measure at this order.
inline Quadrature gauss_quadrature(const std::vector<double>& moments, int n) {
    if (n < 1) throw Error("node count must be >= 1");
    if (static_cast<int>(moments.size()) < 2 * n)
        throw Error("need moments 0..2n-1");
    if (moments[0] != 1.0) throw Error("m_0 must be 1");

    const int m = 2 * n;
    std::vector<double> alpha(n, 0.0), beta(n, 0.0);
    // sigma[k][l] = <p_k, x^l>; two rolling rows suffice.
    std::vector<double> prev(m, 0.0), cur(moments.begin(), moments.begin() + m);
    alpha[0] = moments[1] / moments[0];
    beta[0] = moments[0];
    for (int k = 1; k < n; ++k) {
        std::vector<double> next(m, 0.0);
        for (int l = k; l <= m - k - 1; ++l) {
            next[l] = cur[l + 1] - alpha[k - 1] * cur[l] -
                      (k >= 2 ? beta[k - 1] * prev[l] : 0.0);
        }
        double diag = next[k];
        if (!(diag > 0.0) || !std::isfinite(diag))
            throw HankelNotPD("moment Hankel matrix not positive definite at order " +
                              std::to_string(k + 1));
        alpha[k] = next[k + 1] / next[k] - cur[k] / cur[k - 1];
        beta[k] = next[k] / cur[k - 1];
        if (!(beta[k] > 0.0) || !std::isfinite(beta[k]))
            throw HankelNotPD("moment Hankel matrix not positive definite at order " +
                              std::to_string(k + 1));
        prev = std::move(cur);
        cur = std::move(next);
    }

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) J(i, i) = alpha[i];
    for (int i = 0; i + 1 < n; ++i) {
        double b = std::sqrt(beta[i + 1]);
        J(i, i + 1) = b;
        J(i + 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success) throw HankelNotPD("Jacobi eigensolve failed");

    Quadrature q;
    q.matched_degree = 2 * n - 1;
    q.nodes.resize(n);
    q.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        q.nodes[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        q.weights[i] = v0 * v0;  // beta_0 = m_0 = 1
    }
    return q;
}

// Gauss rule for the radial measure sigma_d r^{d-1} e^{-pi r^2} dr with
// ceil((t+1)/2) nodes; matches radial moments 0..t and beyond up to 2n-1.
inline Quadrature radial_design(int d, int t) {
    if (d < 1) throw Error("dimension must be >= 1");
    if (t < 0) throw Error("strength must be >= 0");
    int n = (t + 2) / 2;  // ceil((t+1)/2)
    std::vector<double> m(2 * n);
    for (int k = 0; k < 2 * n; ++k) m[k] = radial_moment(k, d).to_double();
    m[0] = 1.0;
    Quadrature q = gauss_quadrature(m, n);
    q.matched_degree = std::max(q.matched_degree, t);
    return q;
}

namespace detail {

// Residuals of the even Gaussian moments for the symmetric multiset
// {±a_1,...,±a_p} ∪ {0}^z of q points: F_j = (2/q) sum_i a_i^{2j} - m_{2j}.
inline void search_residual(const std::vector<double>& a, int q, int num_eq,
                            const std::vector<double>& target,
                            std::vector<double>& f) {
    f.assign(num_eq, 0.0);
    for (int j = 1; j <= num_eq; ++j) {
        double s = 0.0;
        for (double ai : a) s += std::pow(ai, 2 * j);
        f[j - 1] = (2.0 / q) * s - target[j - 1];
    }
}

}  // namespace detail

// Search for q real numbers whose uniform distribution matches the Gaussian
// moments 0..t. Candidates are negation-symmetric (pairs ±a_i plus zeros),
// so odd moments vanish structurally and only the even residual system is
// solved, by damped Gauss-Newton with seeded restarts. A failed search is
// reported as "no solution found", never as a nonexistence proof.
inline std::optional<std::vector<double>> unweighted_1d_gaussian_design(
    int t, int q, std::uint64_t seed, int max_restarts = 200) {
    if (t < 0) throw Error("strength must be >= 0");
    if (q < 1) throw Error("point count must be >= 1");

    const int num_eq = t / 2;  // even moments 2,4,...,2*num_eq
    std::vector<double> target(num_eq);
    for (int j = 1; j <= num_eq; ++j)
        target[j - 1] =
            gaussian_moment(MultiIndex(std::vector<int>{2 * j})).to_double();

    auto assemble = [&](const std::vector<double>& a, int zeros) {
        std::vector<double> pts;
        for (double ai : a) {
            pts.push_back(-std::abs(ai));
            pts.push_back(std::abs(ai));
        }
        for (int i = 0; i < zeros; ++i) pts.push_back(0.0);
        std::sort(pts.begin(), pts.end());
        return pts;
    };

    if (num_eq == 0) {
        // Only the mean constraint, satisfied by any symmetric multiset.
        int p = q / 2, z = q % 2;
        std::vector<double> a(p, 0.0);
        if (p > 0) {
            Rng rng(derive_seed(seed, 0));
            for (double& ai : a)
                ai = std::abs(rng.normal()) / std::sqrt(2.0 * std::numbers::pi);
        }
        return assemble(a, z);
    }

    const double tol = 1e-10;
    auto accepts = [&](const std::vector<double>& f) {
        for (int j = 0; j < num_eq; ++j)
            if (std::abs(f[j]) > tol * std::max(1.0, std::abs(target[j])))
                return false;
        return true;
    };

    std::vector<int> zero_counts;
    for (int z = q % 2; z <= q; z += 2) zero_counts.push_back(z);

    {  // all-zeros candidate never improves with iteration; check once
        std::vector<double> f, a;
        detail::search_residual(a, q, num_eq, target, f);
        if (accepts(f)) return assemble(a, q);
    }

    // Round-robin over the pair/zero decompositions, one seeded
    // Gauss-Newton run each, until the restart budget runs out.
    for (int restart = 0; restart < max_restarts; ++restart) {
        int z = zero_counts[restart % zero_counts.size()];
        int p = (q - z) / 2;
        if (p == 0) continue;

        Rng rng(derive_seed(seed, restart));
        std::vector<double> a(p);
        for (double& ai : a)
            ai = (0.2 + std::abs(rng.normal())) / std::sqrt(2.0 * std::numbers::pi);

        std::vector<double> f;
        double lambda = 1e-8;
        for (int iter = 0; iter < 300; ++iter) {
            detail::search_residual(a, q, num_eq, target, f);
            double fn = 0.0;
            for (double fi : f) fn = std::max(fn, std::abs(fi));
            if (fn <= tol * 0.01) break;

            Eigen::MatrixXd Jm(num_eq, p);
            for (int j = 1; j <= num_eq; ++j)
                for (int i = 0; i < p; ++i)
                    Jm(j - 1, i) = (4.0 * j / q) * std::pow(a[i], 2 * j - 1);
            Eigen::VectorXd fv(num_eq);
            for (int j = 0; j < num_eq; ++j) fv(j) = f[j];

            Eigen::MatrixXd H =
                Jm.transpose() * Jm + lambda * Eigen::MatrixXd::Identity(p, p);
            Eigen::VectorXd step = H.ldlt().solve(Jm.transpose() * fv);
            std::vector<double> trial(p);
            for (int i = 0; i < p; ++i) trial[i] = a[i] - step(i);

            std::vector<double> ft;
            detail::search_residual(trial, q, num_eq, target, ft);
            double fn_t = 0.0;
            for (double fi : ft) fn_t = std::max(fn_t, std::abs(fi));
            if (fn_t < fn) {
                a = trial;
                lambda = std::max(lambda * 0.3, 1e-12);
            } else {
                lambda *= 10.0;
                if (lambda > 1e12) break;
            }
        }

        detail::search_residual(a, q, num_eq, target, f);
        if (accepts(f)) return assemble(a, z);
    }
    return std::nullopt;
}

}  // namespace designforge
