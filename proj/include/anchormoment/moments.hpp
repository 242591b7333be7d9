#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "anchormoment/rational.hpp"

namespace anchormoment {

/// Largest n accepted by the exact (rational) path.
inline constexpr std::int64_t kExactSizeGuard = 2000;
/// Largest n accepted by the floating-point path.
inline constexpr std::int64_t kFloatSizeGuard = 10'000'000;

/// Raised when a query exceeds a documented size guard.
class SizeGuardError : public std::length_error {
public:
    SizeGuardError(const std::string& guard, std::int64_t limit, std::int64_t requested);

    const std::string& guard() const { return guard_; }
    std::int64_t limit() const { return limit_; }

private:
    std::string guard_;
    std::int64_t limit_;
};

enum class Parity { Even, Odd };

/// n sensors, moment order a.
struct MomentQuery {
    std::int64_t n = 1;
    int a = 1;

    /// Throws std::invalid_argument unless n >= 1 and a >= 1.
    MomentQuery(std::int64_t n_, int a_);

    Parity parity() const { return a % 2 == 0 ? Parity::Even : Parity::Odd; }
};

/// Anchor t_i = (2i - 1) / (2n). Throws std::out_of_range unless 1 <= i <= n.
ExactRational anchor(std::int64_t i, std::int64_t n);

/// E_i^(a) = E|X_(i) - t_i|^a and its split into the full signed integral
/// E[(X_(i) - t_i)^a] plus the doubled left tail 2 E[(t_i - X_(i))^a ; X_(i) < t_i].
/// For even a the signed integral already is the moment and the folded part is 0.
struct SensorMoment {
    std::int64_t i = 0;
    ExactRational t;
    ExactRational e_total;
    ExactRational e_signed_part;
    ExactRational e_folded_part;
};

struct MomentBreakdown {
    std::int64_t n = 0;
    int a = 0;
    std::vector<SensorMoment> per_sensor;
    ExactRational total;
};

/// E[X_(i)^j] = i^(rising j) / (n+1)^(rising j) for the i-th of n uniform order statistics.
ExactRational order_statistic_raw_moment(std::int64_t i, std::int64_t n, std::int64_t j);

/// Exact per-sensor moment: split at t_i, expand each side binomially and
/// reduce every term to Beta and regularized incomplete Beta values.
SensorMoment per_sensor_moment_exact(const MomentQuery& q, std::int64_t i);

/// Exact total over all sensors. Throws SizeGuardError when n > kExactSizeGuard.
MomentBreakdown total_moment_exact(const MomentQuery& q);

/// The folded part E_i^(a,2) for odd a, computed along the incomplete-Beta
/// step-down chain: every I(t_i; i+j, n-i+1) is expressed through the single
/// value I(t_i; i, n-i+1) plus closed-form boundary terms. The two pieces are
/// the I(t_i; i, n-i+1)-proportional part and the boundary-term part.
struct FoldedSplit {
    ExactRational base_part;      ///< 2 A_i I(t_i; i, n-i+1)
    ExactRational boundary_part;  ///< the step-down boundary terms
    ExactRational total;
};

/// Throws std::invalid_argument for even a, std::out_of_range for i outside [1, n].
FoldedSplit folded_part_via_incomplete_beta(const MomentQuery& q, std::int64_t i);

struct FloatSensorMoment {
    std::int64_t i = 0;
    double t = 0.0;
    double e_total = 0.0;
    double e_signed_part = 0.0;
    double e_folded_part = 0.0;
};

struct FloatMomentBreakdown {
    std::int64_t n = 0;
    int a = 0;
    double total = 0.0;
    double signed_total = 0.0;
    double folded_total = 0.0;
    std::vector<FloatSensorMoment> per_sensor;  ///< filled only on request
};

/// Floating-point total for large n. Each sensor's two half-integrals are
/// evaluated by panelled Gauss-Legendre quadrature on the log-space Beta
/// density; sums are compensated. Throws SizeGuardError past kFloatSizeGuard.
FloatMomentBreakdown total_moment_float(const MomentQuery& q, bool keep_per_sensor = false);

/// The two half-integrals of one sensor: left = int_0^t (t-x)^a f, right = int_t^1 (x-t)^a f.
struct HalfIntegrals {
    double left = 0.0;
    double right = 0.0;
};
HalfIntegrals sensor_half_integrals_float(std::int64_t n, int a, std::int64_t i);

}  // namespace anchormoment
