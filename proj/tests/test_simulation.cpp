#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "anchormoment/moments.hpp"
#include "anchormoment/simulation.hpp"

using namespace anchormoment;

TEST_CASE("displacement cost sorts and measures against the anchors") {
    std::vector<double> xs{0.9, 0.1};
    // anchors 1/4 and 3/4
    CHECK(displacement_cost(xs, 1) == doctest::Approx(0.15 + 0.15));
    CHECK(xs[0] == 0.1);
    std::vector<double> ys{0.5};
    CHECK(displacement_cost(ys, 3) == 0.0);
    std::vector<double> zs{0.0, 1.0};
    CHECK(displacement_cost(zs, 2) == doctest::Approx(2 * 0.0625));
}

TEST_CASE("trial streams are uniform in [0, 1) and reproducible") {
    TrialRng a = TrialRng::for_trial(5, 123);
    TrialRng b = TrialRng::for_trial(5, 123);
    TrialRng c = TrialRng::for_trial(5, 124);
    double mean = 0.0;
    for (int k = 0; k < 100000; ++k) {
        const double u = a.uniform();
        CHECK(b.uniform() == u);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        mean += u;
    }
    CHECK(mean / 100000 == doctest::Approx(0.5).epsilon(0.01));
    CHECK(TrialRng::for_trial(5, 123)() != c());
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(estimate({0, 1, 10, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(estimate({2, 0, 10, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(estimate({2, 1, 0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(estimate({2, 1, 10, 1, 0}), std::invalid_argument);
}

TEST_CASE("results do not depend on the worker count") {
    const SimulationResult one = estimate({7, 3, 20001, 42, 1});
    for (int workers : {2, 3, 8}) {
        const SimulationResult many = estimate({7, 3, 20001, 42, workers});
        CHECK(many.mean == one.mean);
        CHECK(many.std_error == one.std_error);
    }
    CHECK(estimate({7, 3, 20001, 43, 1}).mean != one.mean);
    CHECK(one.trials == 20001);
    CHECK(one.seed == 42);
    CHECK(one.ci95_low < one.mean);
    CHECK(one.mean < one.ci95_high);
    CHECK(one.ci95_high - one.mean == doctest::Approx(1.959963984540054 * one.std_error));
}

TEST_CASE("single-trial estimate has zero spread") {
    const SimulationResult r = estimate({3, 1, 1, 9, 4});
    CHECK(r.std_error == 0.0);
    CHECK(r.mean > 0.0);
}

TEST_CASE("Monte Carlo estimates are unbiased for the exact moment") {
    const std::vector<std::pair<int, int>> cases{{2, 1}, {5, 1}, {10, 3}, {50, 2}};
    std::uint64_t seed = 2024;
    for (const auto& [n, a] : cases) {
        const double exact = total_moment_exact(MomentQuery(n, a)).total.to_double();
        const SimulationResult r = estimate({n, a, 1'000'000, seed++, 1});
        INFO("n=" << n << " a=" << a << " mean=" << r.mean << " exact=" << exact);
        CHECK(std::fabs(r.mean - exact) <= 5.0 * r.std_error);
    }
}
