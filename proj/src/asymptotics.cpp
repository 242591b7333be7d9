#include "anchormoment/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "anchormoment/combinatorics.hpp"
#include "anchormoment/moments.hpp"
#include "anchormoment/numeric.hpp"

namespace anchormoment {

namespace {

void require_odd(int a, const char* what) {
    if (a < 1 || a % 2 == 0) {
        throw std::invalid_argument(std::string(what) + ": a must be an odd positive integer");
    }
}

void require_n(std::int64_t n, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": n must be >= 1");
    }
}

ExactRational q(long value) { return ExactRational(value); }

}  // namespace

HalfIntValue leading_constant(int a) {
    if (a < 1) {
        throw std::invalid_argument("leading_constant: a must be >= 1");
    }
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(a / 2));
    const HalfIntValue power_of_two(ExactRational(two_pow), 0, a % 2);
    return gamma_half_int(a + 2) / (power_of_two * HalfIntValue(q(a + 1)));
}

double leading_power(int a) { return 1.0 - 0.5 * static_cast<double>(a); }

ExactRational lemma1_sum(std::int64_t n, int a) {
    require_odd(a, "lemma1_sum");
    require_n(n, "lemma1_sum");
    const ExactRational nq(static_cast<long>(n));
    const ExactRational half(1, 2);
    ExactRational total(0);
    for (int j = 0; j <= a; ++j) {
        // inner = sum_i (i - 1/2)^(a-j) i^(rising j) / (n+1)^(rising j)
        //       = sum_{l1,l2} C(a-j,l1) 2^-l1 {a-j-l1, l2} (n)^(falling l2+1) / (l2+j+1)
        // using (i - 1/2)^m = sum_l1 C(m,l1) 2^-l1 (i-1)^(m-l1), the subset
        // numbers, and sum_i (i-1)^(falling d) i^(rising f) = (n-1)^(falling d) n^(rising f+1) / (f+d+1).
        ExactRational inner(0);
        const int m = a - j;
        for (int l1 = 0; l1 <= m; ++l1) {
            ExactRational by_l2(0);
            for (int l2 = 0; l2 <= m - l1; ++l2) {
                by_l2 += ExactRational(stirling_subset(m - l1, l2)) * falling_factorial(nq, l2 + 1) / q(l2 + j + 1);
            }
            inner += ExactRational(binomial(m, l1)) * half.pow(l1) * by_l2;
        }
        ExactRational term = ExactRational(binomial(a, j)) * nq.pow(j - a) * inner;
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

ExactRational lemma2_weight(std::int64_t n, int a, std::int64_t i) {
    require_odd(a, "lemma2_weight");
    if (i < 1 || i > n) {
        throw std::out_of_range("lemma2_weight: sensor index outside [1, n]");
    }
    const ExactRational nq(static_cast<long>(n));
    const ExactRational iq(static_cast<long>(i));
    const ExactRational shifted = iq - ExactRational(1, 2);
    ExactRational sum(0);
    for (int j = 0; j <= a; ++j) {
        ExactRational term = ExactRational(binomial(a, j)) * nq.pow(j) * shifted.pow(a - j) * rising_factorial(iq, j) *
                             falling_factorial(nq + q(a), a - j);
        if (j % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum / (nq.pow(a) * rising_factorial(nq + q(1), a));
}

ExactRational lemma2_sum(std::int64_t n, int a) {
    require_odd(a, "lemma2_sum");
    require_n(n, "lemma2_sum");
    if (n > kExactSizeGuard) {
        throw SizeGuardError("exact-path size guard", kExactSizeGuard, n);
    }
    ExactRational total(0);
    for (std::int64_t i = 1; i <= n; ++i) {
        const ExactRational ib = incomplete_beta_regularized_exact({anchor(i, n), i, n - i + 1});
        total += lemma2_weight(n, a, i) * ib;
    }
    return total;
}

CoefficientSet b_coefficients(int a) {
    require_odd(a, "b_coefficients");
    if (a > 15) {
        throw std::invalid_argument("b_coefficients: a must be <= 15");
    }
    const int h = (a - 1) / 2;
    CoefficientSet out;
    out.a = a;
    for (int q1 = 0; q1 <= h; ++q1) {
        const int p1 = h - q1;
        const ExactRational inv_fact = ExactRational(1) / ExactRational(factorial(q1) * factorial(p1));
        ExactRational b(0);
        for (int j = 0; j <= a; ++j) {
            ExactRational over_k(0);
            for (int k = 1; k <= j; ++k) {
                const ExactRational first = ExactRational(k * k, 2) - ExactRational((a - j) * (a - j), 2);
                const ExactRational second =
                    ExactRational(j - k) * (ExactRational(j) - ExactRational(1, 2)) - ExactRational((j - k) * (j - k), 2);
                over_k += first.pow(q1) * second.pow(p1);
            }
            // (-1)^(j+1)
            if (j % 2 == 0) {
                b -= ExactRational(binomial(a, j)) * over_k;
            } else {
                b += ExactRational(binomial(a, j)) * over_k;
            }
        }
        out.entries.emplace(std::make_pair(q1, p1), b * inv_fact);
    }
    return out;
}

Technical2bCheck verify_technical2b(int a) {
    const CoefficientSet coeffs = b_coefficients(a);
    // 2 / sqrt(2 pi) = sqrt(2) / sqrt(pi)
    const HalfIntValue prefactor(ExactRational(1), -1, 1);
    HalfIntValue lhs;
    for (const auto& [key, b] : coeffs.entries) {
        const int p1 = key.second;
        lhs += prefactor * beta_exact(HalfInteger::from_twice(2 * (a - p1) + 1), HalfInteger::from_twice(3)) *
               HalfIntValue(b);
    }
    Technical2bCheck out{lhs, leading_constant(a), {}};
    auto& r = out.result;
    r.name = "technical2b[a=" + std::to_string(a) + "]";
    r.identity = "sum_{q1+p1=(a-1)/2} 2/sqrt(2pi) B(a-p1+1/2,3/2) b_{q1,p1}(a) = Gamma(a/2+1)/(2^(a/2)(1+a))";
    r.detail = "lhs=" + lhs.str() + " rhs=" + out.rhs.str();
    if (lhs == out.rhs) {
        r.exact = true;
        r.residual = 0.0;
        r.pass = true;
    } else {
        r.exact = lhs.same_basis(out.rhs);
        r.residual = std::fabs(lhs.to_double() - out.rhs.to_double());
        r.pass = !r.exact && r.residual <= 1e-12;
    }
    return out;
}

double lemma4_sum(std::int64_t n, double c) {
    require_n(n, "lemma4_sum");
    if (n > kFloatSizeGuard) {
        throw SizeGuardError("float-path size guard", kFloatSizeGuard, n);
    }
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("lemma4_sum: c must be a finite non-negative number");
    }
    const double nd = static_cast<double>(n);
    CompensatedSum sum;
    for (std::int64_t i = 1; i <= n; ++i) {
        const double id = static_cast<double>(i);
        const double t = (2.0 * id - 1.0) / (2.0 * nd);
        // 2 i C(n,i) = 2 / B(i, n-i+1)
        const double log_term =
            std::numbers::ln2 - log_beta(id, nd - id + 1.0) + (nd - id + 1.0) * std::log1p(-t) + (id + c) * std::log(t);
        sum += std::exp(log_term);
    }
    return sum.value();
}

double lemma4_constant(double c) {
    return 2.0 / std::sqrt(2.0 * std::numbers::pi) * std::exp(log_beta(c + 1.5, 1.5));
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("least_squares_slope: need at least two paired points");
    }
    const double count = static_cast<double>(xs.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        mean_x += xs[k];
        mean_y += ys[k];
    }
    mean_x /= count;
    mean_y /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sxy += (xs[k] - mean_x) * (ys[k] - mean_y);
        sxx += (xs[k] - mean_x) * (xs[k] - mean_x);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("least_squares_slope: abscissae are all equal");
    }
    return sxy / sxx;
}

AsymptoticReport remainder_diagnostic(Theorem theorem, int a, const std::vector<std::int64_t>& n_grid) {
    if (a < 1) {
        throw std::invalid_argument("remainder_diagnostic: a must be >= 1");
    }
    if (theorem == Theorem::EvenMoments && a % 2 != 0) {
        throw std::invalid_argument("remainder_diagnostic: theorem 1 covers even a only");
    }
    if (theorem == Theorem::OddMoments && a % 2 == 0) {
        throw std::invalid_argument("remainder_diagnostic: theorem 2 covers odd a only");
    }
    if (n_grid.size() < 2) {
        throw std::invalid_argument("remainder_diagnostic: grid needs at least two points");
    }
    for (std::size_t k = 0; k < n_grid.size(); ++k) {
        if (n_grid[k] < 1 || (k > 0 && n_grid[k] <= n_grid[k - 1])) {
            throw std::invalid_argument("remainder_diagnostic: grid must be strictly increasing positive integers");
        }
    }
    AsymptoticReport report;
    report.theorem = theorem;
    report.a = a;
    report.constant = leading_constant(a);
    report.constant_value = report.constant.to_double();
    report.predicted_power = leading_power(a);
    report.n_grid = n_grid;
    report.well_conditioned =
        n_grid.size() >= 4 && static_cast<double>(n_grid.back()) >= 100.0 * static_cast<double>(n_grid.front());

    std::vector<double> log_n;
    std::vector<double> log_residual;
    for (const std::int64_t n : n_grid) {
        const double measured = total_moment_float(MomentQuery(n, a)).total;
        const double scale = std::pow(static_cast<double>(n), report.predicted_power);
        const double residual = measured - report.constant_value * scale;
        report.measured.push_back(measured);
        report.normalized.push_back(measured / scale);
        report.residual.push_back(residual);
        if (std::fabs(residual) > 1e-13 * std::fabs(measured)) {
            log_n.push_back(std::log(static_cast<double>(n)));
            log_residual.push_back(std::log(std::fabs(residual)));
        }
    }
    if (log_n.size() >= 2) {
        report.fitted_exponent = least_squares_slope(log_n, log_residual);
    } else {
        report.degenerate = true;
        report.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
    }
    return report;
}

}  // namespace anchormoment
