#pragma once

#include <cstdint>
#include <string>

#include "anchormoment/rational.hpp"

namespace anchormoment {

/// Exact value  rational * sqrt(pi)^pi_half_power * sqrt(2)^sqrt2_power.
///
/// Gamma at half-integers, Beta at half-integers and the constants of the
/// asymptotic formulas all live in this multiplicative ring. The sqrt(2)
/// exponent is kept in {0, 1}: even powers are folded into the rational.
/// Zero is stored with both exponents 0.
class HalfIntValue {
public:
    HalfIntValue() = default;
    HalfIntValue(ExactRational rational, int pi_half_power = 0, int sqrt2_power = 0);  // NOLINT

    static HalfIntValue sqrt_pi() { return {ExactRational(1), 1, 0}; }
    static HalfIntValue sqrt_two() { return {ExactRational(1), 0, 1}; }

    const ExactRational& rational_part() const { return rational_; }
    int pi_half_power() const { return pi_half_power_; }
    int sqrt2_power() const { return sqrt2_power_; }

    bool is_zero() const { return rational_.is_zero(); }
    /// True when both values carry the same irrational factor.
    bool same_basis(const HalfIntValue& other) const;

    double to_double() const;
    /// e.g. "3/4*sqrt(pi)", "1/8*pi", "1/8*sqrt(2)*sqrt(pi)".
    std::string str() const;

    HalfIntValue& operator*=(const HalfIntValue& rhs);
    HalfIntValue& operator/=(const HalfIntValue& rhs);
    /// Throws std::domain_error unless the bases agree (or one side is zero).
    HalfIntValue& operator+=(const HalfIntValue& rhs);
    HalfIntValue& operator-=(const HalfIntValue& rhs);

    friend HalfIntValue operator*(HalfIntValue lhs, const HalfIntValue& rhs) { return lhs *= rhs; }
    friend HalfIntValue operator/(HalfIntValue lhs, const HalfIntValue& rhs) { return lhs /= rhs; }
    friend HalfIntValue operator+(HalfIntValue lhs, const HalfIntValue& rhs) { return lhs += rhs; }
    friend HalfIntValue operator-(HalfIntValue lhs, const HalfIntValue& rhs) { return lhs -= rhs; }
    HalfIntValue operator-() const { return {-rational_, pi_half_power_, sqrt2_power_}; }

    friend bool operator==(const HalfIntValue& lhs, const HalfIntValue& rhs);

private:
    void normalize();

    ExactRational rational_;
    int pi_half_power_ = 0;
    int sqrt2_power_ = 0;
};

/// A positive integer or half-integer, stored as twice its value.
class HalfInteger {
public:
    static HalfInteger from_twice(std::int64_t twice);
    static HalfInteger of(std::int64_t value) { return from_twice(2 * value); }

    std::int64_t twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    double to_double() const { return static_cast<double>(twice_) / 2.0; }

    friend HalfInteger operator+(HalfInteger lhs, HalfInteger rhs) { return from_twice(lhs.twice_ + rhs.twice_); }

private:
    explicit HalfInteger(std::int64_t twice) : twice_(twice) {}
    std::int64_t twice_;
};

/// Gamma(two_z / 2) exactly; two_z >= 1.
HalfIntValue gamma_half_int(std::int64_t two_z);

/// B(c, d) = Gamma(c) Gamma(d) / Gamma(c + d).
HalfIntValue beta_exact(HalfInteger c, HalfInteger d);

struct IncompleteBetaQuery {
    ExactRational z;
    std::int64_t c = 1;
    std::int64_t d = 1;
};

/// Regularized incomplete Beta I(z; c, d) for integer c, d >= 1 and rational
/// z in [0, 1], computed exactly. Throws std::domain_error outside that domain.
ExactRational incomplete_beta_regularized_exact(const IncompleteBetaQuery& q);

/// I(z; c, d) from I(z; c-1, d) by integration by parts:
///   I(z;c,d) = I(z;c-1,d) - Gamma(c+d-1)/(Gamma(c)Gamma(d)) z^(c-1) (1-z)^d.
/// Requires c >= 2 (std::invalid_argument otherwise).
ExactRational incomplete_beta_step_down(const IncompleteBetaQuery& q);

/// Floating-point I(z; c, d) for real c, d > 0 (continued fraction with the
/// usual symmetry switch). Throws std::domain_error outside the domain.
double incomplete_beta_float(double z, double c, double d);

/// log B(c, d) accurate to a few ulps of the *result* for large arguments.
double log_beta(double c, double d);

/// log of the Beta(c, d) density at x = (c + u) / (c + d). Taking the offset
/// u from c/(c+d) as the argument avoids cancelling large logarithms when
/// c and d are big, so the absolute error stays near eps * |u|.
class CenteredLogBetaDensity {
public:
    /// Throws std::domain_error unless c, d are finite and positive.
    CenteredLogBetaDensity(double c, double d);
    double operator()(double u) const;

private:
    double c_;
    double d_;
    double constant_;
};

double log_beta_density_centered(double u, double c, double d);

struct StirlingBounds {
    double lower = 0.0;      ///< exp(log_lower); overflows past m ~ 170
    double upper = 0.0;
    double log_lower = 0.0;  ///< log of sqrt(2 pi) m^(m+1/2) e^(-m + 1/(12m+1))
    double log_upper = 0.0;  ///< log of sqrt(2 pi) m^(m+1/2) e^(-m + 1/(12m))
    double exact_log = 0.0;  ///< log(m!) from the exact big-integer factorial
};

StirlingBounds stirling_bounds(std::int64_t m);

}  // namespace anchormoment
