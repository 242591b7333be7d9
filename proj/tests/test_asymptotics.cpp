#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "anchormoment/asymptotics.hpp"
#include "anchormoment/combinatorics.hpp"
#include "anchormoment/moments.hpp"

using namespace anchormoment;

namespace {

ExactRational q(long v) { return ExactRational(v); }

// The lemma-1 double sum evaluated literally, term by term.
ExactRational lemma1_literal(long n, int a) {
    const ExactRational nq(n);
    ExactRational total(0);
    for (long i = 1; i <= n; ++i) {
        for (int j = 0; j <= a; ++j) {
            ExactRational term = nq.pow(-a) * ExactRational(binomial(a, j)) * nq.pow(j) * (q(i) - ExactRational(1, 2)).pow(a - j) *
                                 rising_factorial(q(i), j) / rising_factorial(q(n + 1), j);
            total += (j % 2 == 0) ? term : -term;
        }
    }
    return total;
}

// E[(t - X_(i))^a] written with t = (2i-1)/(2n): the lemma-2 weight in raw-moment form.
ExactRational lemma2_weight_literal(long n, int a, long i) {
    const ExactRational t(2 * i - 1, 2 * n);
    ExactRational sum(0);
    for (int j = 0; j <= a; ++j) {
        ExactRational term = ExactRational(binomial(a, j)) * t.pow(a - j) * order_statistic_raw_moment(i, n, j);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

ExactRational incomplete_beta_tail(const ExactRational& z, long c, long d) {
    const long m = c + d - 1;
    ExactRational sum(0);
    for (long k = c; k <= m; ++k) sum += ExactRational(binomial(m, k)) * z.pow(k) * (ExactRational(1) - z).pow(m - k);
    return sum;
}

}  // namespace

TEST_CASE("leading constants") {
    CHECK(leading_constant(1) == HalfIntValue(ExactRational(1, 8), 1, 1));
    CHECK(leading_constant(1).to_double() == doctest::Approx(std::sqrt(2 * std::numbers::pi) / 8).epsilon(1e-15));
    CHECK(leading_constant(2) == HalfIntValue(ExactRational(1, 6)));
    CHECK(leading_constant(4) == HalfIntValue(ExactRational(1, 10)));
    CHECK(leading_constant(3).to_double() == doctest::Approx(0.11749820037332814).epsilon(1e-14));
    CHECK(leading_constant(5).to_double() == doctest::Approx(0.09791516697777346).epsilon(1e-14));
    CHECK(leading_power(1) == 0.5);
    CHECK(leading_power(4) == -1.0);
    CHECK_THROWS_AS(leading_constant(0), std::invalid_argument);
}

TEST_CASE("lemma1_sum closed form equals the literal double sum") {
    for (int a : {1, 3, 5, 7}) {
        for (long n = 1; n <= 25; ++n) {
            CHECK(lemma1_sum(n, a) == lemma1_literal(n, a));
        }
    }
    CHECK_THROWS_AS(lemma1_sum(10, 2), std::invalid_argument);
    CHECK_THROWS_AS(lemma1_sum(0, 1), std::invalid_argument);
}

TEST_CASE("lemma1_sum is minus the summed signed parts, which cancel by reflection") {
    for (int a : {1, 3, 5}) {
        for (long n : {1L, 6L, 13L}) {
            ExactRational signed_sum(0);
            for (const auto& s : total_moment_exact(MomentQuery(n, a)).per_sensor) signed_sum += s.e_signed_part;
            CHECK(lemma1_sum(n, a) == -signed_sum);
            CHECK(lemma1_sum(n, a) == ExactRational(0));
        }
    }
    // Large n costs nothing: the closed form does not loop over sensors.
    CHECK(lemma1_sum(2'000'000, 5) == ExactRational(0));
}

TEST_CASE("lemma2_weight equals E[(t_i - X_(i))^a]") {
    for (int a : {1, 3, 5}) {
        for (long n : {1L, 4L, 11L}) {
            for (long i = 1; i <= n; ++i) CHECK(lemma2_weight(n, a, i) == lemma2_weight_literal(n, a, i));
        }
    }
    CHECK_THROWS_AS(lemma2_weight(5, 3, 6), std::out_of_range);
}

TEST_CASE("lemma2_sum equals its literal oracle and half the base part of the folded split") {
    for (int a : {1, 3, 5}) {
        for (long n = 1; n <= 18; ++n) {
            ExactRational literal(0);
            ExactRational half_base(0);
            for (long i = 1; i <= n; ++i) {
                literal += lemma2_weight_literal(n, a, i) * incomplete_beta_tail(ExactRational(2 * i - 1, 2 * n), i, n - i + 1);
                half_base += folded_part_via_incomplete_beta(MomentQuery(n, a), i).base_part / q(2);
            }
            const ExactRational value = lemma2_sum(n, a);
            CHECK(value == literal);
            CHECK(value == half_base);
        }
    }
    CHECK_THROWS_AS(lemma2_sum(kExactSizeGuard + 1, 1), SizeGuardError);
    CHECK_THROWS_AS(lemma2_sum(10, 4), std::invalid_argument);
}

TEST_CASE("b coefficients") {
    const CoefficientSet one = b_coefficients(1);
    REQUIRE(one.entries.size() == 1);
    CHECK(one.entries.at({0, 0}) == q(1));
    const CoefficientSet three = b_coefficients(3);
    CHECK(three.entries.at({0, 1}) == q(2));
    CHECK(three.entries.at({1, 0}) == q(-2));
    const CoefficientSet seven = b_coefficients(7);
    CHECK(seven.entries.at({0, 3}) == q(48));
    CHECK(seven.entries.at({1, 2}) == q(-144));
    CHECK(seven.entries.at({2, 1}) == q(144));
    CHECK(seven.entries.at({3, 0}) == q(-48));
    const CoefficientSet nine = b_coefficients(9);
    CHECK(nine.entries.at({0, 4}) == q(384));
    CHECK(nine.entries.at({2, 2}) == q(2304));
    CHECK_THROWS_AS(b_coefficients(4), std::invalid_argument);
    CHECK_THROWS_AS(b_coefficients(17), std::invalid_argument);
}

TEST_CASE("technical identity holds exactly") {
    for (int a : {1, 3, 5, 7, 9, 11, 13, 15}) {
        const Technical2bCheck check = verify_technical2b(a);
        CHECK(check.result.pass);
        CHECK(check.result.exact);
        CHECK(check.lhs == check.rhs);
        CHECK(check.result.residual == 0.0);
    }
    const Technical2bCheck one = verify_technical2b(1);
    CHECK(one.lhs == HalfIntValue(ExactRational(1, 8), 1, 1));
}

TEST_CASE("lemma4_sum matches an exact rational oracle for integer c") {
    for (int c : {0, 1, 3}) {
        for (long n : {1L, 2L, 7L, 30L, 60L}) {
            ExactRational exact(0);
            for (long i = 1; i <= n; ++i) {
                const ExactRational t(2 * i - 1, 2 * n);
                exact += q(2 * i) * ExactRational(binomial(n, i)) * (ExactRational(1) - t).pow(n - i + 1) * t.pow(i + c);
            }
            CHECK(std::fabs(lemma4_sum(n, c) - exact.to_double()) <= 1e-12 * exact.to_double());
        }
    }
    CHECK(lemma4_constant(0) == doctest::Approx(0.3133285343288751).epsilon(1e-14));
    CHECK(lemma4_constant(1) == doctest::Approx(std::sqrt(2 * std::numbers::pi) / 16).epsilon(1e-14));
    CHECK_THROWS_AS(lemma4_sum(10, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(lemma4_sum(0, 1.0), std::invalid_argument);
}

TEST_CASE("least squares slope") {
    CHECK(least_squares_slope({1, 2, 3, 4}, {3, 5, 7, 9}) == doctest::Approx(2.0));
    CHECK(least_squares_slope({0, 1}, {1, 0}) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(least_squares_slope({1}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(least_squares_slope({2, 2}, {1, 3}), std::invalid_argument);
}

TEST_CASE("remainder diagnostic recovers the 1/n remainder at a = 2") {
    const AsymptoticReport rep = remainder_diagnostic(Theorem::EvenMoments, 2, {100, 1000, 10000, 100000});
    CHECK(rep.constant == HalfIntValue(ExactRational(1, 6)));
    CHECK(rep.well_conditioned);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.fitted_exponent == doctest::Approx(-1.0).epsilon(1e-6));
    for (std::size_t k = 0; k < rep.n_grid.size(); ++k) {
        const double n = static_cast<double>(rep.n_grid[k]);
        CHECK(rep.residual[k] == doctest::Approx(-1.0 / (12.0 * n)).epsilon(1e-6));
    }
}

TEST_CASE("remainder diagnostic for odd a converges to the constant") {
    const AsymptoticReport rep = remainder_diagnostic(Theorem::OddMoments, 1, {100, 1000, 10000});
    CHECK_FALSE(rep.well_conditioned);
    CHECK(std::fabs(rep.normalized.back() - 0.3133285343288751) < 1e-4);
    CHECK(std::fabs(rep.residual[2]) < std::fabs(rep.residual[0]));
    CHECK(rep.fitted_exponent < 0.0);
}

TEST_CASE("remainder diagnostic validates its inputs") {
    CHECK_THROWS_AS(remainder_diagnostic(Theorem::EvenMoments, 3, {10, 100}), std::invalid_argument);
    CHECK_THROWS_AS(remainder_diagnostic(Theorem::OddMoments, 2, {10, 100}), std::invalid_argument);
    CHECK_THROWS_AS(remainder_diagnostic(Theorem::OddMoments, 1, {100}), std::invalid_argument);
    CHECK_THROWS_AS(remainder_diagnostic(Theorem::OddMoments, 1, {100, 10}), std::invalid_argument);
    CHECK_THROWS_AS(remainder_diagnostic(Theorem::OddMoments, 1, {0, 10}), std::invalid_argument);
}
