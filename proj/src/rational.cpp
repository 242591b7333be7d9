#include "anchormoment/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace anchormoment {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("ExactRational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

ExactRational ExactRational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw std::invalid_argument("ExactRational: cannot parse '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::domain_error("ExactRational: zero denominator");
    }
    q.canonicalize();
    ExactRational out;
    out.value_ = q;
    return out;
}

double log_abs(const BigInt& value) {
    if (value == 0) {
        return -std::numeric_limits<double>::infinity();
    }
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double ExactRational::to_double() const {
    if (is_zero()) {
        return 0.0;
    }
    const double direct = value_.get_d();
    if (direct != 0.0 && std::isfinite(direct)) {
        return direct;
    }
    const double magnitude = std::exp(log_abs());
    return sign() < 0 ? -magnitude : magnitude;
}

double ExactRational::log_abs() const {
    return anchormoment::log_abs(value_.get_num()) - anchormoment::log_abs(value_.get_den());
}

std::string ExactRational::str() const { return value_.get_str(10); }

ExactRational ExactRational::abs() const {
    ExactRational out;
    out.value_ = ::abs(value_);
    return out;
}

ExactRational ExactRational::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) {
            throw std::domain_error("ExactRational: zero to a negative power");
        }
        return ExactRational(1) / pow(-exponent);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    ExactRational out;
    // Powers of coprime integers stay coprime.
    out.value_ = mpq_class(num, den);
    return out;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("ExactRational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

ExactRational ExactRational::operator-() const {
    ExactRational out;
    out.value_ = -value_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
    return os << value.str();
}

}  // namespace anchormoment
