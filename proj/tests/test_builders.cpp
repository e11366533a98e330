#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "designforge/builders.hpp"
#include "designforge/verify.hpp"

using namespace designforge;

TEST_CASE("cross-polytope basics") {
    auto X1 = cross_polytope(1);
    CHECK(X1.size() == 2);
    CHECK(verify_design(X1, 3, VerifyMode::Exact).pass);

    auto X3 = cross_polytope(3);
    CHECK(X3.size() == 6);
    CHECK(X3.kind == Kind::Unweighted);
    X3.validate();
    CHECK(verify_design(X3, 3, VerifyMode::Exact).exact_zero);
    auto rep4 = verify_design(X3, 4, VerifyMode::Exact);
    CHECK(!rep4.pass);
    CHECK(rep4.worst_residual == doctest::Approx(2.0 / 15));
}

// ---- pool fitting and pruning ----

TEST_CASE("fit and prune: cross-polytope plus random sphere points") {
    Rng rng(17);
    std::vector<std::vector<double>> pool;
    auto cp = cross_polytope(3);
    for (int i = 0; i < cp.size(); ++i) pool.push_back(cp.point_as_doubles(i));
    for (int i = 0; i < 20; ++i) pool.push_back(rng.unit_vector(3));

    auto fitted = fit_weights_on_pool(pool, Measure::Sphere, 3, 2);
    CHECK(verify_design(fitted, 2, VerifyMode::Float, 1e-9).pass);

    auto pruned = caratheodory_prune(fitted, 2);
    CHECK(!pruned.stalled);
    CHECK(pruned.set.size() <= 9);  // dim P_2 on the sphere
    CHECK(verify_design(pruned.set, 2, VerifyMode::Float, 1e-9).pass);
    for (int i = 0; i < pruned.set.size(); ++i) CHECK(pruned.set.weight(i) > 0);
}

TEST_CASE("fit and prune against the gaussian measure") {
    Rng rng(41);
    std::vector<std::vector<double>> pool;
    auto cube = gaussian_product_design(3, 3, 2, 5).set;  // exact 3-design
    for (int i = 0; i < cube.size(); ++i) pool.push_back(cube.point_as_doubles(i));
    double s = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (int i = 0; i < 12; ++i) {
        std::vector<double> p(3);
        for (double& x : p) x = s * rng.normal();
        pool.push_back(p);
    }
    auto fitted = fit_weights_on_pool(pool, Measure::Gaussian, 3, 2);
    CHECK(verify_design(fitted, 2, VerifyMode::Float, 1e-9).pass);
    auto pruned = caratheodory_prune(fitted, 2);
    CHECK(pruned.set.size() <= 10);  // dim P_2 on R^3
    CHECK(verify_design(pruned.set, 2, VerifyMode::Float, 1e-9).pass);
}

TEST_CASE("fit fails on a degenerate pool") {
    // ten copies of the same point cannot match degree-2 sphere moments
    std::vector<std::vector<double>> pool(10, {1.0, 0.0, 0.0});
    CHECK_THROWS_AS(fit_weights_on_pool(pool, Measure::Sphere, 3, 2), FitFailed);
    // and a too-small pool is rejected up front
    std::vector<std::vector<double>> tiny(3, {1.0, 0.0, 0.0});
    CHECK_THROWS_AS(fit_weights_on_pool(tiny, Measure::Sphere, 3, 2), FitFailed);
}

TEST_CASE("prune returns small supports unchanged") {
    auto X = cross_polytope(3);  // 6 points <= dim P_2 = 9
    auto res = caratheodory_prune(X, 2);
    CHECK(res.set.size() == 6);
    CHECK(!res.stalled);
}

TEST_CASE("prune at strength zero keeps a single point") {
    Rng rng(23);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(rng.unit_vector(3));
    std::vector<double> ws(8, 1.0 / 8);
    auto X = WeightedPointSet::from_doubles(Measure::Sphere, Kind::Weighted, 3,
                                            pts, ws);
    auto res = caratheodory_prune(X, 0);
    CHECK(!res.stalled);
    REQUIRE(res.set.size() == 1);
    CHECK(res.set.weight(0) == doctest::Approx(1.0));
}

namespace {

// Exact 3-design on 24 rational points: the signed-permutation orbit of
// (3/5, 4/5, 0).
WeightedPointSet pythagorean_orbit() {
    std::set<std::vector<Rational>> pts;
    Rational a = make_rational(3, 5), b = make_rational(4, 5), z(0);
    std::vector<std::vector<Rational>> base{{a, b, z}, {a, z, b}, {b, a, z},
                                            {b, z, a}, {z, a, b}, {z, b, a}};
    for (const auto& p : base)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    pts.insert({s1 * p[0], s2 * p[1], s3 * p[2]});
    std::vector<std::vector<Rational>> list(pts.begin(), pts.end());
    std::vector<Rational> ws(list.size(), make_rational(1, list.size()));
    return WeightedPointSet::from_rationals(Measure::Sphere, Kind::Unweighted, 3,
                                            list, ws, 3);
}

}  // namespace

TEST_CASE("exact pruning keeps the moments bit for bit") {
    auto orbit = pythagorean_orbit();
    REQUIRE(orbit.size() == 24);
    REQUIRE(verify_design(orbit, 3, VerifyMode::Exact).exact_zero);

    // mix with the cross-polytope, weights 1/2 each
    auto cp = cross_polytope(3);
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> ws;
    auto add_scaled = [&](const WeightedPointSet& S) {
        for (int i = 0; i < S.size(); ++i) {
            std::vector<Rational> p;
            for (int j = 0; j < 3; ++j)
                p.push_back(S.points[i][j].exact_value().coeff());
            pts.push_back(p);
            ws.push_back(S.weights[i].exact_value().coeff() / 2);
        }
    };
    add_scaled(orbit);
    add_scaled(cp);
    auto mix = WeightedPointSet::from_rationals(Measure::Sphere, Kind::Weighted, 3,
                                                pts, ws, 3);
    REQUIRE(mix.size() == 30);
    REQUIRE(verify_design(mix, 2, VerifyMode::Exact).exact_zero);

    auto res = caratheodory_prune(mix, 2);
    CHECK(!res.stalled);
    CHECK(res.set.size() <= 9);
    CHECK(res.set.exact_mode());
    auto rep = verify_design(res.set, 2, VerifyMode::Exact);
    CHECK(rep.exact_zero);  // moments preserved exactly
    for (int i = 0; i < res.set.size(); ++i)
        CHECK(res.set.weights[i].exact_value().coeff() > 0);
}

// ---- product designs ----

TEST_CASE("product design: full cube at d=3, t=3, q=2") {
    auto prod = gaussian_product_design(3, 3, 2, 5);
    CHECK(prod.set.size() == 8);
    double a = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (int i = 0; i < prod.set.size(); ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(prod.set.coord(i, j)) == doctest::Approx(a));
    CHECK(verify_design(prod.set, 3, VerifyMode::Float, 1e-9).pass);
    CHECK(!twise_verify(prod.array, 3).has_value());
}

TEST_CASE("product design meets the size budget at d=8") {
    auto prod = gaussian_product_design(8, 3, 2, 5);
    CHECK(prod.set.size() <= 16384);  // (8 q d)^{t-1}
    CHECK(verify_design(prod.set, 3, VerifyMode::Float, 1e-9).pass);
}

TEST_CASE("product design propagates the 1-D search failure") {
    CHECK_THROWS_AS(gaussian_product_design(2, 5, 4, 5), NoSolution);
}

TEST_CASE("product design averages monomials beyond total degree t") {
    // every monomial on <= t variables with each exponent <= t is averaged
    auto prod = gaussian_product_design(3, 3, 2, 5);
    for (const auto& alpha : enumerate_multi_indices(3, 9)) {
        int vars = 0, maxe = 0;
        for (int j = 0; j < 3; ++j) {
            if (alpha[j] > 0) ++vars;
            maxe = std::max(maxe, alpha[j]);
        }
        if (vars > 3 || maxe > 3) continue;
        double sum = 0.0;
        for (int i = 0; i < prod.set.size(); ++i) {
            double v = prod.set.weight(i);
            for (int j = 0; j < 3; ++j)
                for (int e = 0; e < alpha[j]; ++e) v *= prod.set.coord(i, j);
            sum += v;
        }
        double target = gaussian_moment(alpha).to_double();
        CHECK_MESSAGE(std::abs(sum - target) <= 1e-9, alpha.to_string());
    }
}

// ---- partitions and orbits ----

TEST_CASE("partition enumeration in graded-lex order") {
    auto p1 = partitions_up_to(1, 5);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].parts.empty());
    CHECK(p1[1].parts == std::vector<int>{1});

    auto p3 = partitions_up_to(3, 5);
    REQUIRE(p3.size() == 7);
    CHECK(p3[0].parts.empty());
    CHECK(p3[1].parts == std::vector<int>{1});
    CHECK(p3[2].parts == std::vector<int>{2});
    CHECK(p3[3].parts == std::vector<int>{1, 1});
    CHECK(p3[4].parts == std::vector<int>{3});
    CHECK(p3[5].parts == std::vector<int>{2, 1});
    CHECK(p3[6].parts == std::vector<int>{1, 1, 1});

    auto p0 = partitions_up_to(0, 4);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].parts.empty());

    // at most d parts
    auto narrow = partitions_up_to(3, 1);
    REQUIRE(narrow.size() == 4);  // (), (1), (2), (3)

    CHECK(partition_count(3) == 3);
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(0) == 1);
}

TEST_CASE("orbit points: multiplicities and closure") {
    auto o1 = orbit_points<Rational>({Rational(1)}, 2);
    REQUIRE(o1.size() == 4);  // +-e_1, +-e_2
    for (const auto& [p, m] : o1) CHECK(m == 1);

    auto o2 = orbit_points<Rational>({Rational(1), Rational(1)}, 2);
    REQUIRE(o2.size() == 4);  // (+-1, +-1), each from two injections
    long long total = 0;
    for (const auto& [p, m] : o2) {
        CHECK(m == 2);
        total += m;
    }
    CHECK(total == 8);  // 2^t d!/(d-t)!

    auto degenerate = orbit_points<Rational>({Rational(0)}, 3);
    REQUIRE(degenerate.size() == 1);
    CHECK(degenerate.begin()->second == 6);  // 2 * 3!/2!

    CHECK_THROWS_AS(orbit_points<Rational>({Rational(1), Rational(1)}, 1),
                    TooManyParts);
}

TEST_CASE("orbit points are closed under negation and permutation") {
    std::vector<Rational> a{make_rational(3, 2), make_rational(1, 2)};
    auto orbit = orbit_points<Rational>(a, 3);
    for (const auto& [p, m] : orbit) {
        std::vector<Rational> neg;
        for (const auto& x : p) neg.push_back(-x);
        auto it = orbit.find(neg);
        REQUIRE(it != orbit.end());
        CHECK(it->second == m);
        std::vector<Rational> rot{p[1], p[2], p[0]};
        auto it2 = orbit.find(rot);
        REQUIRE(it2 != orbit.end());
        CHECK(it2->second == m);
    }
}

TEST_CASE("orbit moments: frozen examples") {
    CHECK(orbit_moment(MultiIndex({2, 0}), {Rational(1)}, 2) == 2);
    CHECK(orbit_moment(MultiIndex({1, 0}), {make_rational(7, 3)}, 2) == 0);
    // |Y_t(a)| via the zero exponent
    CHECK(orbit_moment(MultiIndex({0, 0, 0}),
                       {make_rational(1, 2), make_rational(5, 4)}, 3) == 24);
}

TEST_CASE("orbit moments agree with brute force over the materialized orbit") {
    std::vector<std::vector<Rational>> gens{
        {make_rational(1, 2)},
        {make_rational(5, 4), make_rational(3, 2)},
        {make_rational(2, 3), make_rational(2, 3)},
    };
    for (int d = 2; d <= 4; ++d) {
        for (const auto& a : gens) {
            if (static_cast<int>(a.size()) > d) continue;
            auto orbit = orbit_points<Rational>(a, d);
            for (const auto& alpha : enumerate_multi_indices(d, 6)) {
                Rational brute(0);
                for (const auto& [p, m] : orbit) {
                    Rational v(static_cast<long>(m));
                    for (int j = 0; j < d; ++j)
                        for (int e = 0; e < alpha[j]; ++e) v *= p[j];
                    brute += v;
                }
                CHECK_MESSAGE(orbit_moment(alpha, a, d) == brute,
                              alpha.to_string(), " a size ", a.size(), " d=", d);
            }
        }
    }
}

// ---- signed designs ----

TEST_CASE("signed gaussian design verifies exactly at strength 2t") {
    auto design = signed_design(3, 2, Measure::Gaussian, 5);
    CHECK(design.strength == 4);
    CHECK(design.generators.size() == 4);  // partitions of 0..2
    CHECK(verify_orbit_design(design, 4).pass);
    CHECK(verify_orbit_odd_vanishing(design, 8).pass);
}

TEST_CASE("signed spherical design has rational weights and verifies exactly") {
    auto design = signed_design(3, 2, Measure::Sphere, 5);
    CHECK(verify_orbit_design(design, 4).pass);
    for (const auto& w : design.weights)
        for (const auto& [power, c] : w.coeffs()) CHECK(power == 0);
}

TEST_CASE("signed design materialization matches the float verifier") {
    auto design = signed_design(4, 2, Measure::Gaussian, 5);
    auto X = materialize_orbit_design(design);
    CHECK(X.kind == Kind::Signed);
    CHECK(static_cast<long long>(X.size()) <= design.materialized_size());
    CHECK(verify_design(X, 4, VerifyMode::Float, 1e-9).pass);
}

TEST_CASE("one-orbit gaussian 2-design: the hand solution") {
    // single generator with a^2 = d/(2 pi), weight 1/(2d) per orbit point
    const int d = 5;
    std::vector<PiPoly> a_sq{PiPoly::term(make_rational(d, 2), 1)};
    // constants: b_0 = 2d, so w = 1/(2d)
    PiPoly w(make_rational(1, 2 * d));
    for (const auto& alpha : enumerate_multi_indices(d, 2)) {
        PiPoly lhs = w * orbit_moment_pi(alpha, a_sq, d);
        PiPoly rhs = PiPoly::from_pi_value(measure_moment(Measure::Gaussian, alpha, d));
        CHECK_MESSAGE(lhs == rhs, alpha.to_string());
    }
}

TEST_CASE("signed design for t=1 on the sphere: cross-polytope weights") {
    // b_0 = 2d and b_(2) = 2 a^2; the solve must give w such that the
    // second moment is 1/d regardless of the sampled generators
    auto design = signed_design(4, 1, Measure::Sphere, 9);
    CHECK(verify_orbit_design(design, 2).pass);
}

TEST_CASE("signed design rejects t > d") {
    CHECK_THROWS_AS(signed_design(2, 3, Measure::Gaussian, 5), TooManyParts);
}

TEST_CASE("signed design scales to strength 8 with exact certificates") {
    auto design = signed_design(8, 4, Measure::Gaussian, 7);
    CHECK(design.generators.size() == 12);  // partitions of 0..4
    CHECK(verify_orbit_design(design, 8).pass);
    CHECK(verify_orbit_odd_vanishing(design, 12).pass);
}

TEST_CASE("signed design with a custom symmetric moment functional") {
    // product measure of the uniform distribution on {-1, +1}^d:
    // every even monomial has moment 1
    const int d = 4, t = 2;
    auto design = signed_design_custom(
        d, t, Measure::Gaussian, [](const Partition&) { return PiPoly(Rational(1)); },
        21);
    for (const auto& alpha : enumerate_multi_indices(d, 2 * t)) {
        PiPoly lhs;
        for (std::size_t j = 0; j < design.generators.size(); ++j)
            lhs += design.weights[j] *
                   PiPoly(orbit_moment(alpha, design.generators[j], d));
        PiPoly expect = alpha.all_even() ? PiPoly(Rational(1)) : PiPoly();
        CHECK_MESSAGE(lhs == expect, alpha.to_string());
    }
}

// ---- reflection families ----

TEST_CASE("reflection family checks") {
    // full cube, uniform: passes any t <= d
    std::vector<std::vector<int>> cube;
    for (int m = 0; m < 8; ++m)
        cube.push_back({m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1});
    std::vector<Rational> uniform(8, make_rational(1, 8));
    CHECK(reflection_family_check(cube, uniform, 3).pass);

    // a single all-ones vector fails immediately at r = 1
    std::vector<std::vector<int>> one{{1, 1}};
    std::vector<Rational> pr{Rational(1)};
    auto rep = reflection_family_check(one, pr, 1);
    CHECK(!rep.pass);
    CHECK(rep.failing_tuple == std::vector<int>{0});
    CHECK(rep.expectation == 1);

    // all four sign vectors of d=2, uniform: passes t = 1
    std::vector<std::vector<int>> four{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::vector<Rational> quarter(4, make_rational(1, 4));
    CHECK(reflection_family_check(four, quarter, 1).pass);

    CHECK(reflection_lower_bound(6, 2) == 15);
}
