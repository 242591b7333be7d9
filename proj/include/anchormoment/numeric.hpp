#pragma once

#include <cmath>

namespace anchormoment {

/// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double value) {
        const double t = sum_ + value;
        if (std::fabs(sum_) >= std::fabs(value)) {
            compensation_ += (sum_ - t) + value;
        } else {
            compensation_ += (value - t) + sum_;
        }
        sum_ = t;
    }
    CompensatedSum& operator+=(double value) {
        add(value);
        return *this;
    }
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace anchormoment
