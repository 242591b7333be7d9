#include "anchormoment/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>

#include "anchormoment/combinatorics.hpp"
#include "anchormoment/numeric.hpp"
#include "anchormoment/special_functions.hpp"

namespace anchormoment {

SizeGuardError::SizeGuardError(const std::string& guard, std::int64_t limit, std::int64_t requested)
    : std::length_error(guard + ": n = " + std::to_string(requested) + " exceeds limit " + std::to_string(limit)),
      guard_(guard),
      limit_(limit) {}

MomentQuery::MomentQuery(std::int64_t n_, int a_) : n(n_), a(a_) {
    if (n < 1) {
        throw std::invalid_argument("MomentQuery: n must be >= 1");
    }
    if (a < 1) {
        throw std::invalid_argument("MomentQuery: a must be >= 1");
    }
}

ExactRational anchor(std::int64_t i, std::int64_t n) {
    if (n < 1 || i < 1 || i > n) {
        throw std::out_of_range("anchor: sensor index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    }
    return {2 * i - 1, 2 * n};
}

ExactRational order_statistic_raw_moment(std::int64_t i, std::int64_t n, std::int64_t j) {
    return rising_factorial(ExactRational(static_cast<long>(i)), j) /
           rising_factorial(ExactRational(static_cast<long>(n + 1)), j);
}

namespace {

// mu_0..mu_a with mu_j = E[X_(i)^j].
std::vector<ExactRational> raw_moments(std::int64_t i, std::int64_t n, int a) {
    std::vector<ExactRational> mu;
    mu.reserve(static_cast<std::size_t>(a) + 1);
    mu.emplace_back(1);
    for (int j = 0; j < a; ++j) {
        mu.push_back(mu.back() * ExactRational(static_cast<long>(i + j), static_cast<long>(n + 1 + j)));
    }
    return mu;
}

void check_index(const MomentQuery& q, std::int64_t i) {
    if (i < 1 || i > q.n) {
        throw std::out_of_range("sensor index " + std::to_string(i) + " outside [1, " + std::to_string(q.n) + "]");
    }
}

}  // namespace

SensorMoment per_sensor_moment_exact(const MomentQuery& q, std::int64_t i) {
    check_index(q, i);
    const int a = q.a;
    const std::int64_t n = q.n;
    SensorMoment out;
    out.i = i;
    out.t = anchor(i, n);

    // Everything is kept as integer numerators over fixed denominators so that
    // only the final values are reduced. With t = p/r and mu_j = i^(rising j) / (n+1)^(rising j),
    //   C(a,j) t^(a-j) mu_j = C(a,j) p^(a-j) r^j i^(rising j) (n+1+j)^(rising a-j) / (r^a (n+1)^(rising a)).
    const BigInt p(2 * i - 1);
    const BigInt r(2 * n);
    std::vector<BigInt> r_pow(static_cast<std::size_t>(a) + 1);
    std::vector<BigInt> p_pow(static_cast<std::size_t>(a) + 1);
    r_pow[0] = 1;
    p_pow[0] = 1;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(a); ++k) {
        r_pow[k] = r_pow[k - 1] * r;
        p_pow[k] = p_pow[k - 1] * p;
    }
    BigInt weight_den = r_pow[static_cast<std::size_t>(a)];
    for (int k = 0; k < a; ++k) weight_den *= n + 1 + k;

    std::vector<BigInt> weight(static_cast<std::size_t>(a) + 1);  // signed weights (-1)^j C(a,j) t^(a-j) mu_j, numerators
    BigInt signed_num(0);
    BigInt weight_sum(0);
    BigInt rise_i(1);
    for (int j = 0; j <= a; ++j) {
        BigInt base = binomial(a, j) * r_pow[static_cast<std::size_t>(j)] * rise_i;
        for (int k = j; k < a; ++k) base *= n + 1 + k;
        base *= p_pow[static_cast<std::size_t>(a - j)];
        // E[(X - t)^a] picks up (-1)^(a-j); the left tail (t - X)^a picks up (-1)^j.
        signed_num += ((a - j) % 2 == 0) ? base : BigInt(-base);
        weight[static_cast<std::size_t>(j)] = (j % 2 == 0) ? base : BigInt(-base);
        weight_sum += weight[static_cast<std::size_t>(j)];
        rise_i *= i + j;
    }
    out.e_signed_part = ExactRational(signed_num, weight_den);

    if (q.parity() == Parity::Even) {
        out.e_folded_part = 0;
        out.e_total = out.e_signed_part;
        return out;
    }

    // Left tail int_0^t (t - x)^a f(x) dx = sum_j weight_j I(t; i+j, d), d = n-i+1.
    // Only I(t; i, d) is evaluated directly; the others follow from
    //   I(t; c+1, d) = I(t; c, d) - C(c+d-1, c) t^c (1-t)^d,
    // whose boundary terms share the denominator r^(n+a).
    const std::int64_t d = n - i + 1;
    const ExactRational base_ib = incomplete_beta_regularized_exact({out.t, i, d});
    BigInt tail;
    mpz_pow_ui(tail.get_mpz_t(), BigInt(r - p).get_mpz_t(), static_cast<unsigned long>(d));
    BigInt t_num;
    mpz_pow_ui(t_num.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(i));
    BigInt boundary(0);  // running sum S_j, numerator over r^(n+a)
    BigInt boundary_weighted(0);
    for (int k = 1; k <= a; ++k) {
        boundary += binomial(n + k - 1, i + k - 1) * t_num * tail * r_pow[static_cast<std::size_t>(a - k)];
        boundary_weighted += weight[static_cast<std::size_t>(k)] * boundary;
        t_num *= p;
    }
    BigInt boundary_den;
    mpz_pow_ui(boundary_den.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n + a));
    const ExactRational left =
        ExactRational(weight_sum, weight_den) * base_ib - ExactRational(boundary_weighted, weight_den * boundary_den);
    out.e_folded_part = ExactRational(2) * left;
    out.e_total = out.e_signed_part + out.e_folded_part;
    return out;
}

MomentBreakdown total_moment_exact(const MomentQuery& q) {
    if (q.n > kExactSizeGuard) {
        throw SizeGuardError("exact-path size guard", kExactSizeGuard, q.n);
    }
    MomentBreakdown out;
    out.n = q.n;
    out.a = q.a;
    out.per_sensor.reserve(static_cast<std::size_t>(q.n));
    ExactRational total(0);
    for (std::int64_t i = 1; i <= q.n; ++i) {
        out.per_sensor.push_back(per_sensor_moment_exact(q, i));
        total += out.per_sensor.back().e_total;
    }
    out.total = total;
    return out;
}

FoldedSplit folded_part_via_incomplete_beta(const MomentQuery& q, std::int64_t i) {
    if (q.parity() != Parity::Odd) {
        throw std::invalid_argument("folded_part_via_incomplete_beta: defined for odd a only");
    }
    check_index(q, i);
    const std::int64_t n = q.n;
    const int a = q.a;
    const ExactRational t = anchor(i, n);
    const ExactRational one_minus_t = ExactRational(1) - t;
    const auto mu = raw_moments(i, n, a);

    const ExactRational base = incomplete_beta_regularized_exact({t, i, n - i + 1});

    // Step-down chain: I(t; i+j, d) = I(t; i, d) - sum_{k=1}^{j} C(n+k-1, i+k-1) t^(i+k-1) (1-t)^d.
    const ExactRational tail_factor = one_minus_t.pow(n - i + 1);
    std::vector<ExactRational> boundary(static_cast<std::size_t>(a) + 1, ExactRational(0));
    ExactRational t_pow = t.pow(i);  // t^(i+k-1) at k = 1
    for (int k = 1; k <= a; ++k) {
        boundary[static_cast<std::size_t>(k)] =
            boundary[static_cast<std::size_t>(k - 1)] + ExactRational(binomial(n + k - 1, i + k - 1)) * t_pow * tail_factor;
        t_pow *= t;
    }

    ExactRational a_coeff(0);
    ExactRational boundary_sum(0);
    for (int j = 0; j <= a; ++j) {
        const ExactRational weight = ExactRational(binomial(a, j)) * t.pow(a - j) * mu[static_cast<std::size_t>(j)];
        if (j % 2 == 0) {
            a_coeff += weight;
            boundary_sum -= weight * boundary[static_cast<std::size_t>(j)];
        } else {
            a_coeff -= weight;
            boundary_sum += weight * boundary[static_cast<std::size_t>(j)];
        }
    }
    FoldedSplit out;
    out.base_part = ExactRational(2) * a_coeff * base;
    out.boundary_part = ExactRational(2) * boundary_sum;
    out.total = out.base_part + out.boundary_part;
    return out;
}

namespace {

using Legendre = boost::math::quadrature::gauss<double, 20>;

// Integrates exp(log_f) over [lo, hi] with the fixed 20-point rule.
template <class LogF>
double panel(const LogF& log_f, double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    const auto& x = Legendre::abscissa();
    const auto& w = Legendre::weights();
    double sum = 0.0;
    // Boost stores the non-negative half of the symmetric rule.
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0.0) {
            sum += w[k] * std::exp(log_f(mid));
        } else {
            sum += w[k] * (std::exp(log_f(mid - half * x[k])) + std::exp(log_f(mid + half * x[k])));
        }
    }
    return sum * half;
}

// Integral of a log-concave integrand from `start` towards `limit`.
// Panels of fixed width are added until the function is past its peak and
// the secant bound on the remaining tail is negligible.
template <class LogF>
double one_sided_integral(const LogF& log_f, double start, double limit, double width) {
    const double direction = limit > start ? 1.0 : -1.0;
    CompensatedSum total;
    double inner = start;
    double log_inner = log_f(start);
    for (;;) {
        double outer = inner + direction * width;
        const bool last = direction > 0 ? outer >= limit : outer <= limit;
        if (last) {
            outer = limit;
        }
        total += panel(log_f, std::min(inner, outer), std::max(inner, outer));
        if (last) {
            break;
        }
        const double log_outer = log_f(outer);
        if (log_outer < log_inner) {
            const double slope = (log_inner - log_outer) / width;
            const double tail_bound = std::exp(log_outer) / slope;
            if (tail_bound <= 1e-18 * total.value()) {
                break;
            }
        }
        inner = outer;
        log_inner = log_outer;
    }
    return total.value();
}

}  // namespace

HalfIntegrals sensor_half_integrals_float(std::int64_t n, int a, std::int64_t i) {
    if (n < 1 || i < 1 || i > n) {
        throw std::out_of_range("sensor index outside [1, n]");
    }
    const double nd = static_cast<double>(n);
    const double c = static_cast<double>(i);
    const double d = nd - c + 1.0;
    const double s = nd + 1.0;
    const double t = (2.0 * c - 1.0) / (2.0 * nd);
    // The integration variable is the offset h = x - t. The density argument
    // u = x s - c splits into h s plus the exact small constant t s - c.
    const double anchor_offset = (2.0 * c - nd - 1.0) / (2.0 * nd);
    const double ad = static_cast<double>(a);
    const CenteredLogBetaDensity log_density(c, d);
    auto log_f = [&](double h) { return ad * std::log(std::fabs(h)) + log_density(h * s + anchor_offset); };
    const double sigma = std::sqrt(c * d / (s * s * (s + 1.0)));
    const double width = 3.0 * sigma;
    HalfIntegrals out;
    out.left = one_sided_integral(log_f, 0.0, -t, width);
    out.right = one_sided_integral(log_f, 0.0, (2.0 * d - 1.0) / (2.0 * nd), width);
    return out;
}

FloatMomentBreakdown total_moment_float(const MomentQuery& q, bool keep_per_sensor) {
    if (q.n > kFloatSizeGuard) {
        throw SizeGuardError("float-path size guard", kFloatSizeGuard, q.n);
    }
    FloatMomentBreakdown out;
    out.n = q.n;
    out.a = q.a;
    const bool odd = q.parity() == Parity::Odd;
    CompensatedSum total;
    CompensatedSum signed_total;
    CompensatedSum folded_total;
    if (keep_per_sensor) {
        out.per_sensor.reserve(static_cast<std::size_t>(q.n));
        for (std::int64_t i = 1; i <= q.n; ++i) {
            const HalfIntegrals halves = sensor_half_integrals_float(q.n, q.a, i);
            FloatSensorMoment s;
            s.i = i;
            s.t = (2.0 * static_cast<double>(i) - 1.0) / (2.0 * static_cast<double>(q.n));
            s.e_total = halves.left + halves.right;
            s.e_signed_part = odd ? halves.right - halves.left : s.e_total;
            s.e_folded_part = odd ? 2.0 * halves.left : 0.0;
            total += s.e_total;
            signed_total += s.e_signed_part;
            folded_total += s.e_folded_part;
            out.per_sensor.push_back(s);
        }
        out.total = total.value();
        out.signed_total = signed_total.value();
        out.folded_total = folded_total.value();
        return out;
    }
    // Sensors i and n+1-i mirror each other under x -> 1-x: equal moments,
    // and for odd a opposite signed parts. Only the first half is integrated.
    for (std::int64_t i = 1; 2 * i <= q.n + 1; ++i) {
        const HalfIntegrals halves = sensor_half_integrals_float(q.n, q.a, i);
        const double weight = (2 * i == q.n + 1) ? 1.0 : 2.0;
        total += weight * (halves.left + halves.right);
    }
    out.total = total.value();
    out.signed_total = odd ? 0.0 : out.total;
    out.folded_total = odd ? out.total : 0.0;
    return out;
}

}  // namespace anchormoment
