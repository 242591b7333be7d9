#include "anchormoment/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "anchormoment/combinatorics.hpp"
#include "anchormoment/numeric.hpp"

namespace anchormoment {

HalfIntValue::HalfIntValue(ExactRational rational, int pi_half_power, int sqrt2_power)
    : rational_(std::move(rational)), pi_half_power_(pi_half_power), sqrt2_power_(sqrt2_power) {
    normalize();
}

void HalfIntValue::normalize() {
    while (sqrt2_power_ >= 2) {
        rational_ *= ExactRational(2);
        sqrt2_power_ -= 2;
    }
    while (sqrt2_power_ < 0) {
        rational_ /= ExactRational(2);
        sqrt2_power_ += 2;
    }
    if (rational_.is_zero()) {
        pi_half_power_ = 0;
        sqrt2_power_ = 0;
    }
}

bool HalfIntValue::same_basis(const HalfIntValue& other) const {
    return pi_half_power_ == other.pi_half_power_ && sqrt2_power_ == other.sqrt2_power_;
}

double HalfIntValue::to_double() const {
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    return rational_.to_double() * std::pow(sqrt_pi, pi_half_power_) * (sqrt2_power_ == 1 ? std::numbers::sqrt2 : 1.0);
}

std::string HalfIntValue::str() const {
    std::ostringstream os;
    os << rational_.str();
    if (pi_half_power_ == 1) {
        os << "*sqrt(pi)";
    } else if (pi_half_power_ == 2) {
        os << "*pi";
    } else if (pi_half_power_ != 0) {
        os << "*sqrt(pi)^" << pi_half_power_;
    }
    if (sqrt2_power_ == 1) {
        os << "*sqrt(2)";
    }
    return os.str();
}

HalfIntValue& HalfIntValue::operator*=(const HalfIntValue& rhs) {
    rational_ *= rhs.rational_;
    pi_half_power_ += rhs.pi_half_power_;
    sqrt2_power_ += rhs.sqrt2_power_;
    normalize();
    return *this;
}

HalfIntValue& HalfIntValue::operator/=(const HalfIntValue& rhs) {
    rational_ /= rhs.rational_;
    pi_half_power_ -= rhs.pi_half_power_;
    sqrt2_power_ -= rhs.sqrt2_power_;
    normalize();
    return *this;
}

HalfIntValue& HalfIntValue::operator+=(const HalfIntValue& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = rhs;
        return *this;
    }
    if (!same_basis(rhs)) {
        throw std::domain_error("HalfIntValue: cannot add " + str() + " and " + rhs.str());
    }
    rational_ += rhs.rational_;
    normalize();
    return *this;
}

HalfIntValue& HalfIntValue::operator-=(const HalfIntValue& rhs) { return *this += -rhs; }

bool operator==(const HalfIntValue& lhs, const HalfIntValue& rhs) {
    return lhs.rational_ == rhs.rational_ && lhs.same_basis(rhs);
}

HalfInteger HalfInteger::from_twice(std::int64_t twice) {
    if (twice < 1) {
        throw std::invalid_argument("HalfInteger: argument must be positive");
    }
    return HalfInteger(twice);
}

HalfIntValue gamma_half_int(std::int64_t two_z) {
    if (two_z < 1) {
        throw std::invalid_argument("gamma_half_int: argument must be positive");
    }
    if (two_z % 2 == 0) {
        return {ExactRational(factorial(two_z / 2 - 1))};
    }
    // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
    const std::int64_t k = (two_z - 1) / 2;
    BigInt four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    return {ExactRational(factorial(2 * k), four_k * factorial(k)), 1, 0};
}

HalfIntValue beta_exact(HalfInteger c, HalfInteger d) {
    return gamma_half_int(c.twice()) * gamma_half_int(d.twice()) / gamma_half_int((c + d).twice());
}

namespace {

void check_query(const IncompleteBetaQuery& q) {
    if (q.z < ExactRational(0) || q.z > ExactRational(1)) {
        throw std::domain_error("incomplete beta: z = " + q.z.str() + " outside [0, 1]");
    }
    if (q.c < 1 || q.d < 1) {
        throw std::domain_error("incomplete beta: parameters must be positive integers");
    }
}

}  // namespace

ExactRational incomplete_beta_regularized_exact(const IncompleteBetaQuery& q) {
    check_query(q);
    if (q.z.is_zero()) {
        return 0;
    }
    if (q.z == ExactRational(1)) {
        return 1;
    }
    // Expanding (1-x)^(d-1) and integrating termwise gives
    //   I(z;c,d) = sum_{l<d} (-1)^l C(m, c+l) C(c+l-1, l) z^(c+l),   m = c+d-1,
    // a terminating hypergeometric series. Nesting it Horner-style with the
    // term ratio keeps every step a big-by-small multiplication.
    const BigInt p = q.z.numerator();
    const BigInt r = q.z.denominator();
    const std::int64_t c = q.c;
    const std::int64_t m = q.c + q.d - 1;
    BigInt num(1);
    BigInt den(1);
    for (std::int64_t k = q.d - 2; k >= 0; --k) {
        // ratio of consecutive terms: -(m-c-k)(c+k) z / ((c+k+1)(k+1))
        const BigInt alpha = BigInt((m - c - k) * (c + k)) * p;
        const BigInt beta = BigInt((c + k + 1) * (k + 1)) * r;
        num = beta * den - alpha * num;
        den *= beta;
    }
    BigInt p_pow;
    BigInt r_pow;
    mpz_pow_ui(p_pow.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(c));
    mpz_pow_ui(r_pow.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(c));
    return ExactRational(binomial(m, c) * p_pow * num, r_pow * den);
}

ExactRational incomplete_beta_step_down(const IncompleteBetaQuery& q) {
    check_query(q);
    if (q.c < 2) {
        throw std::invalid_argument("incomplete_beta_step_down: requires c >= 2");
    }
    const ExactRational previous = incomplete_beta_regularized_exact({q.z, q.c - 1, q.d});
    // Gamma(c+d-1) / (Gamma(c) Gamma(d)) = C(c+d-2, c-1)
    const ExactRational weight(binomial(q.c + q.d - 2, q.c - 1));
    return previous - weight * q.z.pow(q.c - 1) * (ExactRational(1) - q.z).pow(q.d);
}

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Stirling remainder w(x) = lgamma(x) - (x - 1/2) log x + x - log(2 pi)/2.
double stirling_remainder(double x) {
    if (x < 10.0) {
        return std::lgamma(x) - (x - 0.5) * std::log(x) + x - kHalfLog2Pi;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli series through x^-13; truncation error < 1e-17 for x >= 10.
    return inv *
           (1.0 / 12 +
            inv2 * (-1.0 / 360 +
                    inv2 * (1.0 / 1260 +
                            inv2 * (-1.0 / 1680 + inv2 * (1.0 / 1188 + inv2 * (-691.0 / 360360 + inv2 / 156.0))))));
}

// log( z^c (1-z)^d / B(c,d) ), written around the mode c/(c+d) so that
// nothing of size lgamma(c+d) gets cancelled.
// z (c + d) - c from error-free products, so the result is accurate
// relative to itself rather than to c.
double offset_from_mean(double z, double c, double d) {
    const double zc = z * c;
    const double zd = z * d;
    CompensatedSum u;
    u += zc;
    u += zd;
    u += -c;
    u += std::fma(z, c, -zc);
    u += std::fma(z, d, -zd);
    return u.value();
}

double log_front(double z, double c, double d) {
    const double s = c + d;
    // z s = c + u and (1 - z) s = d - u.
    const double u = offset_from_mean(z, c, d);
    // log1p is only the better form while the relative offset is small; far
    // from the mean, log(z s / c) and log((1 - z) s / d) are exact enough.
    const double log_zs_c = std::fabs(u) < 0.5 * c ? std::log1p(u / c) : std::log(z) + std::log(s / c);
    const double log_ws_d = std::fabs(u) < 0.5 * d ? std::log1p(-u / d) : std::log1p(-z) + std::log(s / d);
    const double head = c * log_zs_c + d * log_ws_d;
    return head + 0.5 * std::log(c * d / s) - kHalfLog2Pi - stirling_remainder(c) - stirling_remainder(d) +
           stirling_remainder(s);
}

// Continued fraction for I(x;a,b), modified Lentz.
double beta_continued_fraction(double a, double b, double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 2.0 * std::numeric_limits<double>::epsilon();
    constexpr int max_iterations = 200000;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps) {
            break;
        }
    }
    return h;
}

}  // namespace

double log_beta(double c, double d) {
    if (c > d) std::swap(c, d);
    const double s = c + d;
    // Stirling's formula regrouped so that the large (d - 1/2) log d and
    // (s - 1/2) log s terms never meet: they combine into (d - 1/2) log1p(-c/s).
    return kHalfLog2Pi + (c - 0.5) * std::log(c / s) + (d - 0.5) * std::log1p(-c / s) - 0.5 * std::log(s) +
           stirling_remainder(c) + stirling_remainder(d) - stirling_remainder(s);
}

CenteredLogBetaDensity::CenteredLogBetaDensity(double c, double d) : c_(c), d_(d) {
    if (!(c > 0.0) || !(d > 0.0) || !std::isfinite(c) || !std::isfinite(d)) {
        throw std::domain_error("CenteredLogBetaDensity: parameters must be positive");
    }
    const double s = c + d;
    // x = (c/s)(1 + u/c), 1 - x = (d/s)(1 - u/d); the powers of c/s and d/s
    // combine with 1/B(c,d) into Stirling's formula.
    constant_ = 0.5 * (std::log(s / c) + std::log(s / d) + std::log(s)) - kHalfLog2Pi - stirling_remainder(c) -
                stirling_remainder(d) + stirling_remainder(s);
}

double CenteredLogBetaDensity::operator()(double u) const {
    if (!(u > -c_ && u < d_)) {
        return -std::numeric_limits<double>::infinity();
    }
    double v = constant_;
    if (c_ != 1.0) v += (c_ - 1.0) * std::log1p(u / c_);
    if (d_ != 1.0) v += (d_ - 1.0) * std::log1p(-u / d_);
    return v;
}

double log_beta_density_centered(double u, double c, double d) { return CenteredLogBetaDensity(c, d)(u); }

double incomplete_beta_float(double z, double c, double d) {
    if (!(z >= 0.0 && z <= 1.0) || !(c > 0.0) || !(d > 0.0) || !std::isfinite(c) || !std::isfinite(d)) {
        throw std::domain_error("incomplete_beta_float: arguments outside domain");
    }
    if (z == 0.0) {
        return 0.0;
    }
    if (z == 1.0) {
        return 1.0;
    }
    const double front = std::exp(log_front(z, c, d));
    if (z < (c + 1.0) / (c + d + 2.0)) {
        return front * beta_continued_fraction(c, d, z) / c;
    }
    return 1.0 - front * beta_continued_fraction(d, c, 1.0 - z) / d;
}

StirlingBounds stirling_bounds(std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("stirling_bounds: m must be positive");
    }
    const double md = static_cast<double>(m);
    const double base = kHalfLog2Pi + (md + 0.5) * std::log(md) - md;
    StirlingBounds out;
    out.log_lower = base + 1.0 / (12.0 * md + 1.0);
    out.log_upper = base + 1.0 / (12.0 * md);
    out.lower = std::exp(out.log_lower);
    out.upper = std::exp(out.log_upper);
    out.exact_log = log_abs(factorial(m));
    return out;
}

}  // namespace anchormoment
