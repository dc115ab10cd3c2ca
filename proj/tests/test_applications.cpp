#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lfhh/applications.hpp"

#include <cmath>

using namespace lfhh;

namespace {

ProbabilityDensity uniform01() {
    ProbabilityDensity p{GeneralizedFunction::constant(1.0)};
    p.nu = 0.0;
    p.mu = 1.0;
    p.symmetric = true;
    return p;
}

} // namespace

TEST_CASE("density validation") {
    ProbabilityDensity p = uniform01();
    CHECK_NOTHROW(p.validate());
    ProbabilityDensity bad{GeneralizedFunction::constant(2.0)};
    bad.nu = 0.0;
    bad.mu = 1.0;  // leaves the default [0,1] bounds
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    ProbabilityDensity asym{GeneralizedFunction::monomial(0.0, {{1, 1.0}})};
    asym.nu = 0.0;
    asym.mu = 1.0;
    asym.symmetric = true;
    CHECK_THROWS_AS(asym.validate(), std::domain_error);
}

TEST_CASE("moments: classical values") {
    ProbabilityDensity p = uniform01();
    CHECK(expectation_alpha(p, Alpha(1.0)).base ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r_moment(p, 2.0, Alpha(1.0)).base ==
          doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(r_moment(p, 0.0, Alpha(1.0)).base == doctest::Approx(1.0).epsilon(1e-12));
    // triangular-ish density base 2x (bounds widened accordingly)
    ProbabilityDensity tri{GeneralizedFunction::monomial(0.0, {{1, 2.0}})};
    tri.nu = 0.0;
    tri.mu = 1.0;
    tri.omega = Fractal{2.0};
    CHECK(expectation_alpha(tri, Alpha(1.0)).base ==
          doctest::Approx(2.0 / 3).epsilon(1e-11));
}

TEST_CASE("moments: Gamma-ratio value at order one half") {
    ProbabilityDensity p = uniform01();
    CHECK(expectation_alpha(p, Alpha(0.5)).base ==
          doctest::Approx(gamma_ratio(1, Alpha(0.5))).epsilon(1e-8));
    // total mass of the unit density, prefactored
    CHECK(r_moment(p, 0.0, Alpha(0.5)).base ==
          doctest::Approx(1.0 / gamma_fn(1.5)).epsilon(1e-10));
}

TEST_CASE("moments: r = 1 is expectation bit-for-bit, monotone in r on [0,1]") {
    ProbabilityDensity p = uniform01();
    for (double a : {0.5, 1.0}) {
        CHECK(r_moment(p, 1.0, Alpha(a)).base ==
              expectation_alpha(p, Alpha(a)).base);
        double prev = r_moment(p, 1.0, Alpha(a)).base;
        for (double r : {1.5, 2.0, 3.0}) {
            const double cur = r_moment(p, r, Alpha(a)).base;
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
    CHECK_THROWS_AS(r_moment(p, -1.0, Alpha(0.5)), std::domain_error);
}

TEST_CASE("moment deviation bound: hand-computed classical case") {
    // r=2, uniform density on [0,1], alpha=1, m=1: 1/6 <= 1/4
    ProbabilityDensity p = uniform01();
    InequalityReport r = verify_moment_bound(p, 2.0, 1.0, Alpha(1.0));
    CHECK(r.sides[0].value.base == doctest::Approx(1.0 / 6).epsilon(1e-10));
    CHECK(r.sides[1].value.base == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("moment deviation bound: scaling invariance of the verdict") {
    // doubling the density scales both sides linearly
    ProbabilityDensity p{GeneralizedFunction::constant(0.5)};
    p.nu = 0.25;
    p.mu = 1.0;
    p.symmetric = true;
    InequalityReport r1 = verify_moment_bound(p, 2.0, 1.0, Alpha(0.5));
    ProbabilityDensity p2{GeneralizedFunction::constant(1.0)};
    p2.nu = 0.25;
    p2.mu = 1.0;
    p2.symmetric = true;
    InequalityReport r2 = verify_moment_bound(p2, 2.0, 1.0, Alpha(0.5));
    CHECK(r2.sides[0].value.base ==
          doctest::Approx(2.0 * r1.sides[0].value.base).epsilon(1e-9));
    CHECK(r2.sides[1].value.base ==
          doctest::Approx(2.0 * r1.sides[1].value.base).epsilon(1e-9));
    CHECK(r1.verdict == Verdict::Holds);
    CHECK(r2.verdict == Verdict::Holds);
}

TEST_CASE("moment deviation bound: preconditions") {
    ProbabilityDensity p = uniform01();
    p.symmetric = false;
    CHECK_THROWS_AS(verify_moment_bound(p, 2.0, 1.0, Alpha(1.0)),
                    configuration_error);
    ProbabilityDensity q = uniform01();
    CHECK_THROWS_AS(verify_moment_bound(q, 0.5, 1.0, Alpha(1.0)),
                    configuration_error);
}

TEST_CASE("partition validation") {
    Partition p = Partition::uniform(0.0, 1.0, 4);
    CHECK(p.cells() == 4);
    CHECK_NOTHROW(p.validate());
    Partition bad;
    bad.points = {0.0, 0.5, 0.5, 1.0};
    CHECK_THROWS_AS(bad.validate(), configuration_error);
    Partition tags;
    tags.points = {0.0, 1.0};
    tags.tags = {1.5};
    CHECK_THROWS_AS(tags.validate(), configuration_error);
}

TEST_CASE("weighted trapezoid: single-cell worked example") {
    // G=x^2, W=1, one cell on [0,1]: T=1/2, actual error 1/6, bound 1/4
    auto G = GeneralizedFunction::monomial(0.0, {{2, 1.0}});
    WeightFunction W{GeneralizedFunction::constant(1.0)};
    Partition part;
    part.points = {0.0, 1.0};
    QuadratureResult r = weighted_trapezoid(G, W, part, Alpha(1.0));
    CHECK(r.value.base == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r.actual_error.base == doctest::Approx(1.0 / 6).epsilon(1e-11));
    CHECK(r.certified_bound.base == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("weighted trapezoid: two uniform cells by hand") {
    // T = (1/8)(1/2) + (5/8)(1/2) = 3/8; error = 3/8 - 1/3 = 1/24;
    // per-cell bounds 1/32 and 3/32 sum to 1/8
    auto G = GeneralizedFunction::monomial(0.0, {{2, 1.0}});
    WeightFunction W{GeneralizedFunction::constant(1.0)};
    QuadratureResult r =
        weighted_trapezoid(G, W, Partition::uniform(0.0, 1.0, 2), Alpha(1.0));
    CHECK(r.value.base == doctest::Approx(3.0 / 8).epsilon(1e-13));
    CHECK(r.actual_error.base == doctest::Approx(1.0 / 24).epsilon(1e-10));
    REQUIRE(r.cells.size() == 2);
    CHECK(r.cells[0].bound == doctest::Approx(1.0 / 32).epsilon(1e-12));
    CHECK(r.cells[1].bound == doctest::Approx(3.0 / 32).epsilon(1e-12));
    CHECK(r.certified_bound.base == doctest::Approx(1.0 / 8).epsilon(1e-12));
}

TEST_CASE("weighted trapezoid: linear G is exact") {
    auto G = GeneralizedFunction::monomial(0.0, {{1, 2.0}});
    WeightFunction W{GeneralizedFunction::constant(1.0)};
    for (int cells : {1, 3}) {
        QuadratureResult r =
            weighted_trapezoid(G, W, Partition::uniform(0.0, 1.0, cells), Alpha(1.0));
        CHECK(r.actual_error.base <= 1e-12);
        CHECK(r.actual_error.base <= r.certified_bound.base);
    }
}

TEST_CASE("weighted trapezoid: certified bound covers the error at alpha < 1") {
    auto G = GeneralizedFunction::monomial(0.0, {{1, 0.5}, {3, 1.5}});
    WeightFunction W{GeneralizedFunction(
        BaseMapped{[](double x) { return 1.0 + x * (1.2 - x); }})};
    QuadratureResult r =
        weighted_trapezoid(G, W, Partition::uniform(0.2, 1.2, 3), Alpha(0.5));
    CHECK(r.actual_error.base <= r.certified_bound.base);
}

TEST_CASE("weighted trapezoid: bound midpoint must stay inside the domain") {
    auto G = GeneralizedFunction::monomial(0.0, {{2, 1.0}});
    G.set_domain(0.0, 1.0);
    WeightFunction W{GeneralizedFunction::constant(1.0)};
    Partition part;
    part.points = {0.0, 1.0};
    // m = 0.4 sends the midpoint argument to 1.25, outside [0,1]
    CHECK_THROWS_AS(weighted_trapezoid(G, W, part, Alpha(1.0), 0.4),
                    std::domain_error);
}

TEST_CASE("adaptive driver") {
    auto G = GeneralizedFunction::monomial(0.0, {{2, 1.0}});
    WeightFunction W{GeneralizedFunction::constant(1.0)};
    // generous target: a single cell suffices (linear G case below is exact)
    auto lin = GeneralizedFunction::monomial(0.0, {{1, 1.0}});
    QuadratureResult r1 =
        adaptive_quadrature(lin, W, Alpha(1.0), 1.0, 0.0, 1.0, 1.0, 64);
    CHECK(r1.converged);
    CHECK(r1.cells.size() == 1);
    // the quadratic needs refinement; the summed bound halves per uniform
    // halving, so the target is reached in ~1/(4*target) cells
    QuadratureResult r2 =
        adaptive_quadrature(G, W, Alpha(1.0), 1.0, 0.0, 1.0, 1e-2, 256);
    CHECK(r2.converged);
    CHECK(r2.certified_bound.base <= 1e-2);
    CHECK(r2.actual_error.base <= r2.certified_bound.base);
    // unreachable target within the cell allowance
    QuadratureResult r3 =
        adaptive_quadrature(G, W, Alpha(1.0), 1.0, 0.0, 1.0, 1e-300, 8);
    CHECK_FALSE(r3.converged);
    CHECK(r3.cells.size() == 8);
}

TEST_CASE("adaptive driver: halving the cells halves the total bound") {
    auto G = GeneralizedFunction::monomial(0.0, {{3, 1.0}});
    WeightFunction W{GeneralizedFunction::constant(1.0)};
    const double b4 =
        weighted_trapezoid(G, W, Partition::uniform(0.0, 1.0, 4), Alpha(1.0))
            .certified_bound.base;
    const double b8 =
        weighted_trapezoid(G, W, Partition::uniform(0.0, 1.0, 8), Alpha(1.0))
            .certified_bound.base;
    CHECK(b8 == doctest::Approx(0.5 * b4).epsilon(0.05));
}
