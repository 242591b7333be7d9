#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace anchormoment {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every arithmetic result is
/// canonicalized, so two equal values compare equal bit-for-bit.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}  // NOLINT(implicit)
    ExactRational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
    ExactRational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)

    /// Throws std::domain_error when `den` is zero.
    ExactRational(const BigInt& num, const BigInt& den);
    ExactRational(long num, long den) : ExactRational(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p" or "p/q".
    static ExactRational parse(const std::string& text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Nearest-ish double; values outside double range saturate to 0 or inf.
    double to_double() const;
    /// Natural log of |x|; finite even when the value under/overflows a double.
    double log_abs() const;
    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    ExactRational abs() const;
    /// Integer power; negative exponents invert (domain_error on 0).
    ExactRational pow(long exponent) const;

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    ExactRational operator-() const;

    friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

/// log|x| for a nonzero big integer, without converting through double.
double log_abs(const BigInt& value);

}  // namespace anchormoment
