#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "anchormoment/combinatorics.hpp"
#include "anchormoment/moments.hpp"
#include "oracles.hpp"

using namespace anchormoment;

TEST_CASE("worked examples") {
    CHECK(total_moment_exact(MomentQuery(2, 1)).total == ExactRational(19, 48));
    CHECK(per_sensor_moment_exact(MomentQuery(2, 1), 1).e_total == ExactRational(19, 96));
    CHECK(total_moment_exact(MomentQuery(1, 3)).total == ExactRational(1, 32));
    // a single sensor sits at 1/2: E|U - 1/2|^a = 2^-a / (a+1)
    for (int a = 1; a <= 9; ++a) {
        CHECK(total_moment_exact(MomentQuery(1, a)).total == ExactRational(1) / ExactRational((1L << a) * (a + 1)));
    }
}

TEST_CASE("query validation and anchors") {
    CHECK_THROWS_AS(MomentQuery(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(MomentQuery(3, 0), std::invalid_argument);
    CHECK(anchor(3, 4) == ExactRational(5, 8));
    CHECK_THROWS_AS(anchor(0, 4), std::out_of_range);
    CHECK_THROWS_AS(anchor(5, 4), std::out_of_range);
    CHECK_THROWS_AS(per_sensor_moment_exact(MomentQuery(4, 1), 5), std::out_of_range);
}

TEST_CASE("size guards name the guard") {
    try {
        total_moment_exact(MomentQuery(kExactSizeGuard + 1, 1));
        FAIL("expected a guard error");
    } catch (const SizeGuardError& e) {
        CHECK(e.guard() == "exact-path size guard");
        CHECK(e.limit() == kExactSizeGuard);
    }
    CHECK_THROWS_AS(total_moment_float(MomentQuery(kFloatSizeGuard + 1, 1)), SizeGuardError);
}

TEST_CASE("raw moments of order statistics") {
    // E[X_(i)] = i/(n+1), E[X_(i)^2] = i(i+1)/((n+1)(n+2))
    CHECK(order_statistic_raw_moment(3, 7, 1) == ExactRational(3, 8));
    CHECK(order_statistic_raw_moment(3, 7, 2) == ExactRational(12, 72));
    CHECK(order_statistic_raw_moment(3, 7, 0) == ExactRational(1));
}

TEST_CASE("even a has the closed form (2n-1)/(12n) at a = 2") {
    for (int n = 1; n <= 60; ++n) {
        const MomentBreakdown br = total_moment_exact(MomentQuery(n, 2));
        CHECK(br.total == ExactRational(2 * n - 1, 12 * n));
        for (const auto& s : br.per_sensor) CHECK(s.e_folded_part == ExactRational(0));
    }
}

TEST_CASE("exact per-sensor values match quadrature") {
    for (int n : {1, 2, 3, 5, 8, 12}) {
        for (int a = 1; a <= 7; ++a) {
            const MomentQuery q(n, a);
            for (int i = 1; i <= n; ++i) {
                const double want = oracle::sensor_moment_quadrature(n, a, i);
                const double got = per_sensor_moment_exact(q, i).e_total.to_double();
                CHECK(std::fabs(got - want) <= 1e-12 * want);
            }
        }
    }
}

TEST_CASE("signed plus folded parts recompose the moment, and the signed part is the raw-moment expansion") {
    for (int n : {3, 7, 15}) {
        for (int a : {1, 2, 3, 4, 5}) {
            const MomentQuery q(n, a);
            for (int i = 1; i <= n; ++i) {
                const SensorMoment s = per_sensor_moment_exact(q, i);
                CHECK(s.e_total == s.e_signed_part + s.e_folded_part);
                ExactRational expansion(0);
                for (int j = 0; j <= a; ++j) {
                    expansion += ExactRational(binomial(a, j)) * (-s.t).pow(a - j) * order_statistic_raw_moment(i, n, j);
                }
                CHECK(s.e_signed_part == expansion);
            }
        }
    }
}

TEST_CASE("sensor moments are symmetric under i -> n+1-i") {
    for (int n : {4, 9, 16}) {
        for (int a = 1; a <= 6; ++a) {
            const MomentBreakdown br = total_moment_exact(MomentQuery(n, a));
            for (int i = 1; i <= n; ++i) {
                CHECK(br.per_sensor[static_cast<std::size_t>(i - 1)].e_total == br.per_sensor[static_cast<std::size_t>(n - i)].e_total);
                CHECK(br.per_sensor[static_cast<std::size_t>(i - 1)].e_total > ExactRational(0));
            }
        }
    }
}

TEST_CASE("moments decrease in a because displacements are below 1") {
    for (int n : {3, 10}) {
        ExactRational previous = total_moment_exact(MomentQuery(n, 1)).total;
        for (int a = 2; a <= 8; ++a) {
            const ExactRational current = total_moment_exact(MomentQuery(n, a)).total;
            CHECK(current < previous);
            previous = current;
        }
    }
}

TEST_CASE("folded part through the step-down chain equals the direct folded part") {
    for (int n = 1; n <= 40; ++n) {
        for (int a : {1, 3, 5}) {
            const MomentQuery q(n, a);
            for (int i = 1; i <= n; ++i) {
                const FoldedSplit split = folded_part_via_incomplete_beta(q, i);
                CHECK(split.total == split.base_part + split.boundary_part);
                CHECK(split.total == per_sensor_moment_exact(q, i).e_folded_part);
            }
        }
    }
    CHECK_THROWS_AS(folded_part_via_incomplete_beta(MomentQuery(4, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(folded_part_via_incomplete_beta(MomentQuery(4, 3), 9), std::out_of_range);
}

TEST_CASE("float path agrees with the exact path") {
    for (int n : {1, 2, 3, 10, 37, 120}) {
        for (int a = 1; a <= 9; ++a) {
            const MomentQuery q(n, a);
            const double exact = total_moment_exact(q).total.to_double();
            const FloatMomentBreakdown f = total_moment_float(q, true);
            CHECK(std::fabs(f.total - exact) <= 1e-10 * exact);
            CHECK(f.per_sensor.size() == static_cast<std::size_t>(n));
            CHECK(f.total == doctest::Approx(f.signed_total + f.folded_total).epsilon(1e-12));
        }
    }
    CHECK(total_moment_float(MomentQuery(5, 3)).per_sensor.empty());
}

TEST_CASE("float half-integrals match quadrature") {
    for (int n : {5, 30}) {
        for (int a : {1, 2, 5}) {
            for (int i : {1, 2, n / 2, n}) {
                const HalfIntegrals h = sensor_half_integrals_float(n, a, i);
                CHECK(std::fabs(h.left + h.right - oracle::sensor_moment_quadrature(n, a, i)) <=
                      1e-12 * (h.left + h.right));
            }
        }
    }
}

TEST_CASE("float path at large n stays on the n^(1 - a/2) scale") {
    // S(n,2) = (2n-1)/(12n) holds exactly; the float path must reproduce it.
    for (long n : {1000L, 100000L, 1000000L}) {
        const double want = (2.0 * n - 1.0) / (12.0 * n);
        CHECK(std::fabs(total_moment_float(MomentQuery(n, 2)).total - want) <= 1e-11 * want);
    }
}
