#include "anchormoment/identities.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "anchormoment/combinatorics.hpp"
#include "anchormoment/special_functions.hpp"

namespace anchormoment {

namespace {

// Records the first mismatch and the largest |lhs - rhs| seen.
class ExactTally {
public:
    ExactTally(std::string name, std::string identity) {
        result_.name = std::move(name);
        result_.identity = std::move(identity);
        result_.pass = true;
        result_.exact = true;
    }

    void compare(const ExactRational& lhs, const ExactRational& rhs, const std::string& where) {
        ++checked_;
        if (lhs == rhs) return;
        result_.residual = std::max(result_.residual, (lhs - rhs).abs().to_double());
        if (result_.pass) {
            result_.detail = "first mismatch at " + where + ": " + lhs.str() + " != " + rhs.str();
        }
        result_.pass = false;
    }

    IdentityCheckResult finish() {
        if (result_.pass) result_.detail = std::to_string(checked_) + " cases exact";
        return result_;
    }

private:
    IdentityCheckResult result_;
    long checked_ = 0;
};

ExactRational q(long v) { return ExactRational(v); }

std::vector<ExactRational> sample_points() {
    std::mt19937_64 gen(0x5eed'1234ULL);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 35);
    std::vector<ExactRational> points;
    for (int k = 0; k < 20; ++k) {
        points.emplace_back(num(gen), den(gen));
    }
    return points;
}

ExactRational eval_power_basis(const std::vector<ExactRational>& coeffs, const ExactRational& x) {
    ExactRational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

}  // namespace

IdentityCheckResult check_telescoping_sum() {
    ExactTally tally("identity", "sum_{i=1}^n (i-1)^(falling d) i^(rising f) = (n-1)^(falling d) n^(rising f+1) / (f+d+1)");
    for (int d = 0; d <= 5; ++d) {
        for (int f = 0; f <= 5; ++f) {
            ExactRational running(0);
            for (long n = 1; n <= 50; ++n) {
                running += falling_factorial(q(n - 1), d) * rising_factorial(q(n), f);
                const ExactRational closed = falling_factorial(q(n - 1), d) * rising_factorial(q(n), f + 1) / q(f + d + 1);
                tally.compare(running, closed, "d=" + std::to_string(d) + " f=" + std::to_string(f) + " n=" + std::to_string(n));
            }
        }
    }
    return tally.finish();
}

IdentityCheckResult check_power_sum_polynomial() {
    ExactTally tally("identitysum", "sum_{k=1}^n k^f - n^(f+1)/(f+1) is a polynomial in n of degree <= f");
    for (int f = 0; f <= 6; ++f) {
        auto g = [f](long n) {
            ExactRational s(0);
            for (long k = 1; k <= n; ++k) s += q(k).pow(f);
            return s - q(n).pow(f + 1) / q(f + 1);
        };
        // Degree <= f on every window of f+2 consecutive points.
        for (long start = 1; start <= 20; ++start) {
            const ExactRational diff = finite_difference(f + 1, [&](std::int64_t j) { return g(start + j); });
            tally.compare(diff, q(0), "f=" + std::to_string(f) + " start=" + std::to_string(start));
        }
    }
    return tally.finish();
}

IdentityCheckResult check_finite_difference_theorem() {
    ExactTally tally("triangle", "sum_j C(a,j)(-1)^j j^m = 0 for m < a, (-1)^a a! for m = a");
    for (int a = 1; a <= 12; ++a) {
        for (int m = 0; m <= a; ++m) {
            const ExactRational value = finite_difference(a, [m](std::int64_t j) { return q(j).pow(m); });
            ExactRational expected(0);
            if (m == a) {
                expected = ExactRational(factorial(a));
                if (a % 2 != 0) expected = -expected;
            }
            tally.compare(value, expected, "a=" + std::to_string(a) + " m=" + std::to_string(m));
        }
    }
    return tally.finish();
}

IdentityCheckResult check_rising_expansion() {
    ExactTally tally("stirling3", "x^(rising m) = sum_l [m,l] x^l");
    const auto points = sample_points();
    for (int m = 0; m <= 10; ++m) {
        const auto coeffs = expand_rising_to_powers(m);
        for (const auto& x : points) {
            tally.compare(rising_factorial(x, m), eval_power_basis(coeffs, x), "m=" + std::to_string(m) + " x=" + x.str());
        }
    }
    return tally.finish();
}

IdentityCheckResult check_falling_expansion() {
    ExactTally tally("stirling2", "x^(falling m) = sum_l [m,l] (-1)^(m-l) x^l");
    const auto points = sample_points();
    for (int m = 0; m <= 10; ++m) {
        std::vector<ExactRational> coeffs;
        for (int l = 0; l <= m; ++l) {
            ExactRational c(stirling_cycle(m, l));
            coeffs.push_back((m - l) % 2 == 0 ? c : -c);
        }
        for (const auto& x : points) {
            tally.compare(falling_factorial(x, m), eval_power_basis(coeffs, x), "m=" + std::to_string(m) + " x=" + x.str());
        }
    }
    return tally.finish();
}

IdentityCheckResult check_power_to_falling() {
    ExactTally tally("stirling", "x^m = sum_l {m,l} x^(falling l)");
    const auto points = sample_points();
    for (int m = 0; m <= 10; ++m) {
        for (const auto& x : points) {
            ExactRational rhs(0);
            for (int l = 0; l <= m; ++l) {
                rhs += ExactRational(stirling_subset(m, l)) * falling_factorial(x, l);
            }
            tally.compare(x.pow(m), rhs, "m=" + std::to_string(m) + " x=" + x.str());
        }
    }
    return tally.finish();
}

IdentityCheckResult check_stirling_formula_bounds() {
    IdentityCheckResult r;
    r.name = "stirlingform";
    r.identity = "sqrt(2pi) m^(m+1/2) e^(-m+1/(12m+1)) < m! < sqrt(2pi) m^(m+1/2) e^(-m+1/(12m)), 1 <= m <= 170";
    r.exact = false;
    r.pass = true;
    double tightest = std::numeric_limits<double>::infinity();
    for (int m = 1; m <= 170; ++m) {
        const StirlingBounds b = stirling_bounds(m);
        const double below = b.exact_log - b.log_lower;
        const double above = b.log_upper - b.exact_log;
        tightest = std::min({tightest, below, above});
        if (!(below > 0.0 && above > 0.0)) {
            if (r.pass) r.detail = "bracketing fails at m=" + std::to_string(m);
            r.pass = false;
            r.residual = std::max(r.residual, std::max(-below, -above));
        }
    }
    if (r.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "smallest log-margin %.3e", tightest);
        r.detail = buf;
    }
    return r;
}

IdentityCheckResult check_eulerian_row_sums() {
    ExactTally tally("euler1", "sum_l <<m,l>> = (2m)! / (m! 2^m)");
    for (int m = 0; m <= 20; ++m) {
        BigInt row(0);
        for (int l = 0; l <= m; ++l) row += eulerian_second_order(m, l);
        BigInt two_m;
        mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(m));
        tally.compare(ExactRational(row), ExactRational(factorial(2 * m), factorial(m) * two_m), "m=" + std::to_string(m));
    }
    return tally.finish();
}

IdentityCheckResult check_subset_near_diagonal() {
    ExactTally tally("euler2", "{m, m-b} = sum_l <<b,l>> C(m+b-1-l, 2b)");
    for (int b = 0; b <= 5; ++b) {
        // b = 0, m = 0 would need C(-1, 0); the binomial here is defined for n >= 0.
        for (int m = (b == 0 ? 1 : 0); m <= 15; ++m) {
            BigInt rhs(0);
            // <<b,b>> = 0 for b >= 1, so l stops at b - 1 and the binomial's top stays >= 0.
            for (int l = 0; l <= std::max(b - 1, 0); ++l) rhs += eulerian_second_order(b, l) * binomial(m + b - 1 - l, 2 * b);
            tally.compare(ExactRational(stirling_subset(m, m - b)), ExactRational(rhs),
                          "m=" + std::to_string(m) + " b=" + std::to_string(b));
        }
    }
    return tally.finish();
}

IdentityCheckResult check_cycle_near_diagonal() {
    ExactTally tally("euler3", "[m, m-b] = sum_l <<b,l>> C(m+l, 2b)");
    for (int b = 0; b <= 5; ++b) {
        for (int m = 0; m <= 15; ++m) {
            BigInt rhs(0);
            for (int l = 0; l <= b; ++l) rhs += eulerian_second_order(b, l) * binomial(m + l, 2 * b);
            tally.compare(ExactRational(stirling_cycle(m, m - b)), ExactRational(rhs),
                          "m=" + std::to_string(m) + " b=" + std::to_string(b));
        }
    }
    return tally.finish();
}

IdentityCheckResult check_beta_integer_formula() {
    ExactTally tally("Emult", "B(c,d) = 1 / (C(c+d-1, c) c) for positive integers; B symmetric on half-integers");
    for (int c = 1; c <= 20; ++c) {
        for (int d = 1; d <= 20; ++d) {
            const HalfIntValue b = beta_exact(HalfInteger::of(c), HalfInteger::of(d));
            const ExactRational expected = ExactRational(1) / (ExactRational(binomial(c + d - 1, c)) * q(c));
            const std::string where = "c=" + std::to_string(c) + " d=" + std::to_string(d);
            tally.compare(b.pi_half_power() == 0 ? b.rational_part() : q(-1), expected, where);
        }
    }
    for (int two_c = 1; two_c <= 21; ++two_c) {
        for (int two_d = 1; two_d <= 21; ++two_d) {
            const HalfIntValue lhs = beta_exact(HalfInteger::from_twice(two_c), HalfInteger::from_twice(two_d));
            const HalfIntValue rhs = beta_exact(HalfInteger::from_twice(two_d), HalfInteger::from_twice(two_c));
            tally.compare(lhs == rhs ? q(0) : q(1), q(0), "2c=" + std::to_string(two_c) + " 2d=" + std::to_string(two_d));
        }
    }
    return tally.finish();
}

IdentityCheckResult check_incomplete_beta_bounded() {
    IdentityCheckResult r;
    r.name = "probal_eq";
    r.identity = "0 <= I(z;c,d) <= 1 on 500 random integer-parameter queries";
    r.pass = true;
    std::mt19937_64 gen(0xbe7a'0001ULL);
    std::uniform_int_distribution<long> param(1, 40);
    std::uniform_int_distribution<long> den(1, 50);
    for (int k = 0; k < 500; ++k) {
        const long dz = den(gen);
        std::uniform_int_distribution<long> num(0, dz);
        const ExactRational z(num(gen), dz);
        const long c = param(gen);
        const long d = param(gen);
        const ExactRational value = incomplete_beta_regularized_exact({z, c, d});
        if (value < ExactRational(0) || value > ExactRational(1)) {
            if (r.pass) r.detail = "I(" + z.str() + ";" + std::to_string(c) + "," + std::to_string(d) + ") = " + value.str();
            r.pass = false;
            r.residual = std::max(r.residual, std::max(-value.to_double(), value.to_double() - 1.0));
        }
    }
    if (r.pass) r.detail = "500 cases in [0, 1]";
    return r;
}

IdentityCheckResult check_incomplete_beta_recurrence() {
    ExactTally tally("incomplete:req", "I(z;c,d) = I(z;c-1,d) - Gamma(c+d-1)/(Gamma(c)Gamma(d)) z^(c-1)(1-z)^d");
    for (const ExactRational& z : {ExactRational(1, 7), ExactRational(1, 3), ExactRational(9, 10)}) {
        for (int c = 2; c <= 30; ++c) {
            for (int d = 1; d <= 30; ++d) {
                tally.compare(incomplete_beta_step_down({z, c, d}), incomplete_beta_regularized_exact({z, c, d}),
                              "z=" + z.str() + " c=" + std::to_string(c) + " d=" + std::to_string(d));
            }
        }
    }
    return tally.finish();
}

IdentityCheckResult check_incomplete_beta_complement() {
    ExactTally tally("complement", "I(z;c,d) + I(1-z;d,c) = 1");
    for (const ExactRational& z : {ExactRational(1, 7), ExactRational(1, 3), ExactRational(9, 10)}) {
        for (int c = 2; c <= 30; ++c) {
            for (int d = 1; d <= 30; ++d) {
                const ExactRational sum =
                    incomplete_beta_regularized_exact({z, c, d}) + incomplete_beta_regularized_exact({ExactRational(1) - z, d, c});
                tally.compare(sum, q(1), "z=" + z.str() + " c=" + std::to_string(c) + " d=" + std::to_string(d));
            }
        }
    }
    return tally.finish();
}

IdentityCheckResult check_gould(int a) {
    if (a < 1 || a % 2 == 0) {
        throw std::invalid_argument("check_gould: a must be odd");
    }
    const int h = (a - 1) / 2;
    ExactRational lhs(0);
    for (int b = 0; b <= a; ++b) {
        const ExactRational term = ExactRational(binomial(h, b)) / q(2 * b + 1);
        lhs += (b % 2 == 0) ? term : -term;
    }
    const HalfIntValue rhs =
        HalfIntValue::sqrt_pi() * HalfIntValue(ExactRational(factorial(h))) / (HalfIntValue(q(2)) * gamma_half_int(a + 2));
    IdentityCheckResult r;
    r.name = "gould100[a=" + std::to_string(a) + "]";
    r.identity = "sum_b C((a-1)/2, b)(-1)^b/(2b+1) = sqrt(pi) ((a-1)/2)! / (2 Gamma(a/2+1))";
    r.exact = true;
    r.pass = HalfIntValue(lhs) == rhs;
    r.residual = r.pass ? 0.0 : std::fabs(lhs.to_double() - rhs.to_double());
    r.detail = "lhs=" + lhs.str() + " rhs=" + rhs.str();
    return r;
}

std::optional<IdentitySuite> parse_identity_suite(std::string_view name) {
    if (name == "all") return IdentitySuite::All;
    if (name == "stirling") return IdentitySuite::Stirling;
    if (name == "eulerian") return IdentitySuite::Eulerian;
    if (name == "beta") return IdentitySuite::Beta;
    if (name == "gould") return IdentitySuite::Gould;
    if (name == "finite-diff") return IdentitySuite::FiniteDiff;
    if (name == "technical2b") return IdentitySuite::Technical2b;
    return std::nullopt;
}

std::string_view identity_suite_name(IdentitySuite suite) {
    switch (suite) {
        case IdentitySuite::All: return "all";
        case IdentitySuite::Stirling: return "stirling";
        case IdentitySuite::Eulerian: return "eulerian";
        case IdentitySuite::Beta: return "beta";
        case IdentitySuite::Gould: return "gould";
        case IdentitySuite::FiniteDiff: return "finite-diff";
        case IdentitySuite::Technical2b: return "technical2b";
    }
    return "all";
}

std::vector<IdentityCheckResult> run_identity_suite(IdentitySuite suite) {
    std::vector<IdentityCheckResult> out;
    const bool all = suite == IdentitySuite::All;
    if (all || suite == IdentitySuite::FiniteDiff) {
        out.push_back(check_telescoping_sum());
        out.push_back(check_power_sum_polynomial());
        out.push_back(check_finite_difference_theorem());
    }
    if (all || suite == IdentitySuite::Stirling) {
        out.push_back(check_rising_expansion());
        out.push_back(check_falling_expansion());
        out.push_back(check_power_to_falling());
        out.push_back(check_stirling_formula_bounds());
    }
    if (all || suite == IdentitySuite::Eulerian) {
        out.push_back(check_eulerian_row_sums());
        out.push_back(check_subset_near_diagonal());
        out.push_back(check_cycle_near_diagonal());
    }
    if (all || suite == IdentitySuite::Beta) {
        out.push_back(check_beta_integer_formula());
        out.push_back(check_incomplete_beta_bounded());
        out.push_back(check_incomplete_beta_recurrence());
        out.push_back(check_incomplete_beta_complement());
    }
    if (all || suite == IdentitySuite::Gould) {
        for (int a : {1, 3, 5, 7, 9}) out.push_back(check_gould(a));
    }
    if (all || suite == IdentitySuite::Technical2b) {
        for (int a : {1, 3, 5, 7}) out.push_back(verify_technical2b(a).result);
    }
    return out;
}

}  // namespace anchormoment
