#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "designforge/point_set.hpp"
#include "designforge/quad1d.hpp"
#include "designforge/verify.hpp"

namespace designforge {

namespace detail {

// Merge coincident points (exact equality or 1e-12 proximity), summing
// weights. Exact duplicates collapse through a sorted pass first; the
// remaining representatives get a pairwise proximity sweep.
inline void merge_coincident(std::vector<std::vector<double>>& pts,
                             std::vector<double>& ws) {
    const double eps = 1e-12;
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return pts[a] < pts[b]; });

    std::vector<std::vector<double>> mp;
    std::vector<double> mw;
    for (int i : idx) {
        if (!mp.empty() && mp.back() == pts[i]) {
            mw.back() += ws[i];
        } else {
            mp.push_back(pts[i]);
            mw.push_back(ws[i]);
        }
    }

    std::vector<std::vector<double>> out_p;
    std::vector<double> out_w;
    for (std::size_t i = 0; i < mp.size(); ++i) {
        bool merged = false;
        for (std::size_t j = 0; j < out_p.size(); ++j) {
            double d2 = 0.0;
            for (std::size_t c = 0; c < mp[i].size(); ++c) {
                double diff = mp[i][c] - out_p[j][c];
                d2 += diff * diff;
            }
            if (d2 <= eps * eps) {
                out_w[j] += mw[i];
                merged = true;
                break;
            }
        }
        if (!merged) {
            out_p.push_back(mp[i]);
            out_w.push_back(mw[i]);
        }
    }
    pts = std::move(out_p);
    ws = std::move(out_w);
}

inline int find_point(const std::vector<std::vector<double>>& pts,
                      const std::vector<double>& y) {
    const double eps = 1e-12;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        double d2 = 0.0;
        for (std::size_t c = 0; c < y.size(); ++c) {
            double diff = y[c] - pts[j][c];
            d2 += diff * diff;
        }
        if (d2 <= eps * eps) return static_cast<int>(j);
    }
    return -1;
}

}  // namespace detail

// Scaled copies r_i * X over the radial Gauss rule turn a spherical
// t-design into a Gaussian t-design with at most ceil((t+1)/2) * N points.
inline WeightedPointSet spherical_to_gaussian(const WeightedPointSet& X, int t,
                                              bool skip_check = false) {
    if (X.measure != Measure::Sphere) throw Error("input must be spherical");
    if (!skip_check) {
        auto rep = verify_design(X, t, VerifyMode::Float, 1e-9);
        if (!rep.pass)
            throw NotADesign("input does not verify as a spherical " +
                             std::to_string(t) + "-design: " + rep.summary());
    }
    Quadrature radial = radial_design(X.dimension, t);

    std::vector<std::vector<double>> pts;
    std::vector<double> ws;
    for (int i = 0; i < radial.size(); ++i) {
        for (int p = 0; p < X.size(); ++p) {
            std::vector<double> y(X.dimension);
            for (int j = 0; j < X.dimension; ++j)
                y[j] = radial.nodes[i] * X.coord(p, j);
            pts.push_back(std::move(y));
            ws.push_back(radial.weights[i] * X.weight(p));
        }
    }
    Kind kind = X.kind == Kind::Signed ? Kind::Signed : Kind::Weighted;
    return WeightedPointSet::from_doubles(Measure::Gaussian, kind, X.dimension,
                                          pts, ws, t);
}

// Projection to the sphere: y = x/|x| with weight w(x)|x|^s, s = 2*floor(t/2),
// normalized by the exact radial moment, merged, then symmetrized with
// averaged weights. At most 2N points. A point at the origin cannot be
// normalized and is a hard error.
inline WeightedPointSet gaussian_to_spherical(const WeightedPointSet& X, int t) {
    if (X.measure != Measure::Gaussian) throw Error("input must be Gaussian");
    const int d = X.dimension;
    const int s = 2 * (t / 2);
    const double normalizer = radial_moment(s, d).to_double();

    std::vector<std::vector<double>> pts;
    std::vector<double> ws;
    for (int i = 0; i < X.size(); ++i) {
        double r2 = 0.0;
        for (int j = 0; j < d; ++j) r2 += X.coord(i, j) * X.coord(i, j);
        if (r2 <= 1e-300)
            throw OriginPoint("point " + std::to_string(i) +
                              " lies at the origin and cannot be normalized");
        double r = std::sqrt(r2);
        std::vector<double> y(d);
        for (int j = 0; j < d; ++j) y[j] = X.coord(i, j) / r;
        pts.push_back(std::move(y));
        ws.push_back(X.weight(i) * std::pow(r, s) / normalizer);
    }

    detail::merge_coincident(pts, ws);

    // Symmetrize: weight(y) <- (w(y) + w(-y)) / 2, adding -y when absent.
    std::vector<std::vector<double>> out_p;
    std::vector<double> out_w;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<double> neg(d);
        for (int j = 0; j < d; ++j) neg[j] = -pts[i][j];
        int k = detail::find_point(pts, neg);
        double w = k >= 0 ? 0.5 * (ws[i] + ws[k]) : 0.5 * ws[i];
        out_p.push_back(pts[i]);
        out_w.push_back(w);
        if (k < 0) {
            out_p.push_back(neg);
            out_w.push_back(w);
        }
    }

    Kind kind = X.kind == Kind::Signed ? Kind::Signed : Kind::Weighted;
    return WeightedPointSet::from_doubles(Measure::Sphere, kind, d, out_p, out_w,
                                          t);
}

// Orthogonal projection deleting coordinates beyond k; weights unchanged,
// strength preserved.
inline WeightedPointSet project_gaussian(const WeightedPointSet& X, int k) {
    if (X.measure != Measure::Gaussian) throw Error("input must be Gaussian");
    if (k < 1 || k > X.dimension)
        throw BadDimension("projection target must satisfy 1 <= k <= d");
    if (k == X.dimension) return X;
    WeightedPointSet out = X;
    out.dimension = k;
    for (auto& p : out.points) p.resize(k);
    return out;
}

// Spherical projection chain: to Gaussian, project, back to the sphere.
// For t >= 2 points projected onto the origin carry zero effective mass
// (their weight enters every spherical moment through w * r^s with s >= 2),
// so they are removed before the conversion back; for t <= 1 the origin is
// a genuine obstruction and the error surfaces.
inline WeightedPointSet project_spherical(const WeightedPointSet& X, int k, int t) {
    WeightedPointSet g = project_gaussian(spherical_to_gaussian(X, t), k);
    if (2 * (t / 2) >= 2) {
        std::vector<std::vector<double>> pts;
        std::vector<double> ws;
        for (int i = 0; i < g.size(); ++i) {
            double r2 = 0.0;
            for (int j = 0; j < k; ++j) r2 += g.coord(i, j) * g.coord(i, j);
            if (r2 <= 1e-300) continue;
            pts.push_back(g.point_as_doubles(i));
            ws.push_back(g.weight(i));
        }
        if (pts.empty()) throw OriginPoint("projection sent every point to the origin");
        g = WeightedPointSet::from_doubles(Measure::Gaussian, g.kind, k, pts, ws, t);
    }
    return gaussian_to_spherical(g, t);
}

}  // namespace designforge
