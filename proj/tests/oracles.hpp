#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <cmath>
#include <cstdint>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/binomial.hpp>

namespace oracle {

// E|X_(i) - t_i|^a for the i-th of n uniform order statistics by adaptive
// Gauss-Kronrod quadrature of the Beta(i, n-i+1) density, split at the anchor.
inline double sensor_moment_quadrature(std::int64_t n, int a, std::int64_t i) {
    const double t = (2.0 * static_cast<double>(i) - 1.0) / (2.0 * static_cast<double>(n));
    const double norm = static_cast<double>(i) *
                        boost::math::binomial_coefficient<double>(static_cast<unsigned>(n), static_cast<unsigned>(i));
    auto f = [&](double x) {
        return norm * std::pow(std::fabs(t - x), a) * std::pow(x, static_cast<double>(i - 1)) *
               std::pow(1.0 - x, static_cast<double>(n - i));
    };
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    return GK::integrate(f, 0.0, t, 6, 1e-13) + GK::integrate(f, t, 1.0, 6, 1e-13);
}

inline double total_moment_quadrature(std::int64_t n, int a) {
    double sum = 0.0;
    for (std::int64_t i = 1; i <= n; ++i) sum += sensor_moment_quadrature(n, a, i);
    return sum;
}

}  // namespace oracle
