#include <doctest.h>

#include <algorithm>

#include "designforge/builders.hpp"
#include "designforge/rng.hpp"
#include "designforge/verify.hpp"

using namespace designforge;

TEST_CASE("cross-polytope certifies exactly at strength 3") {
    auto X = cross_polytope(3);
    auto rep = verify_design(X, 3, VerifyMode::Exact);
    CHECK(rep.pass);
    CHECK(rep.exact_zero);
    for (double r : rep.per_degree_max_residual) CHECK(r == 0.0);
}

TEST_CASE("cross-polytope fails at strength 4 with the exact residual") {
    auto X = cross_polytope(3);
    auto rep = verify_design(X, 4, VerifyMode::Exact);
    CHECK(!rep.pass);
    CHECK(rep.worst_monomial.exponents == std::vector<int>{4, 0, 0});
    CHECK(rep.worst_residual == doctest::Approx(2.0 / 15).epsilon(1e-15));
    // degrees 0..3 stay exact even in the failing report
    for (int deg = 0; deg <= 3; ++deg)
        CHECK(rep.per_degree_max_residual[deg] == 0.0);
}

TEST_CASE("exact verification needs exact scalars") {
    std::vector<std::vector<double>> pts{{1.0}, {-1.0}};
    std::vector<double> ws{0.5, 0.5};
    auto X = WeightedPointSet::from_doubles(Measure::Sphere, Kind::Unweighted, 1,
                                            pts, ws);
    CHECK_THROWS_AS(verify_design(X, 1, VerifyMode::Exact), ExactUnsupported);
    CHECK(verify_design(X, 1, VerifyMode::Float).pass);
}

TEST_CASE("float verification of a gaussian product design") {
    auto prod = gaussian_product_design(3, 3, 2, 5);
    auto rep = verify_design(prod.set, 3, VerifyMode::Float, 1e-9);
    CHECK(rep.pass);
    CHECK(prod.set.size() == 8);  // the full cube over +-1/sqrt(2 pi)
}

TEST_CASE("verification is monotone in the strength") {
    auto X = cross_polytope(4);
    auto rep5 = verify_design(X, 5, VerifyMode::Exact);
    CHECK(!rep5.pass);
    // passing at t implies passing at every t' < t
    for (int t = 0; t <= 3; ++t) CHECK(verify_design(X, t, VerifyMode::Exact).pass);
    // and the per-degree residuals of the bigger report agree
    for (int deg = 0; deg <= 3; ++deg)
        CHECK(rep5.per_degree_max_residual[deg] == 0.0);
}

TEST_CASE("coordinate permutation leaves reports invariant") {
    Rng rng(8);
    std::vector<std::vector<double>> pts;
    std::vector<double> ws(7, 1.0 / 7);
    for (int i = 0; i < 7; ++i) pts.push_back(rng.unit_vector(4));
    auto X = WeightedPointSet::from_doubles(Measure::Sphere, Kind::Unweighted, 4,
                                            pts, ws);
    auto base = verify_design(X, 3, VerifyMode::Float);

    std::vector<int> perm{2, 0, 3, 1};
    std::vector<std::vector<double>> ppts;
    for (const auto& p : pts) {
        std::vector<double> q(4);
        for (int j = 0; j < 4; ++j) q[j] = p[perm[j]];
        ppts.push_back(q);
    }
    auto Y = WeightedPointSet::from_doubles(Measure::Sphere, Kind::Unweighted, 4,
                                            ppts, ws);
    auto permuted = verify_design(Y, 3, VerifyMode::Float);
    CHECK(base.pass == permuted.pass);
    for (int deg = 0; deg <= 3; ++deg)
        CHECK(base.per_degree_max_residual[deg] ==
              doctest::Approx(permuted.per_degree_max_residual[deg])
                  .epsilon(1e-12));
}

TEST_CASE("exact and float verification agree across fixtures") {
    for (int d : {1, 2, 3, 5}) {
        auto X = cross_polytope(d);
        for (int t = 0; t <= 4; ++t) {
            auto exact = verify_design(X, t, VerifyMode::Exact);
            auto approx = verify_design(X, t, VerifyMode::Float, 1e-9);
            CHECK_MESSAGE(exact.pass == approx.pass, "d=", d, " t=", t);
        }
    }
}

TEST_CASE("odd-monomial vanishing") {
    auto X = cross_polytope(3);
    CHECK(verify_odd_vanishing(X, 5).pass);

    std::vector<std::vector<Rational>> one{{Rational(1), Rational(0)}};
    std::vector<Rational> w1{Rational(1)};
    auto singleton = WeightedPointSet::from_rationals(Measure::Sphere,
                                                      Kind::Unweighted, 2, one, w1);
    auto rep = verify_odd_vanishing(singleton, 1);
    CHECK(!rep.pass);
    REQUIRE(rep.failing_monomial.has_value());
    CHECK(rep.failing_monomial->exponents == std::vector<int>{1, 0});
}
