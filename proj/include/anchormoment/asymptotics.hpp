#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "anchormoment/rational.hpp"
#include "anchormoment/special_functions.hpp"

namespace anchormoment {

/// Outcome of checking one identity (or one instance of it).
struct IdentityCheckResult {
    std::string name;      ///< short identifier, e.g. "technical2b[a=3]"
    std::string identity;  ///< human-readable statement of what was checked
    bool pass = false;
    double residual = 0.0;  ///< 0 for exact agreement; otherwise |lhs - rhs| or the violation size
    bool exact = true;      ///< decided in exact arithmetic
    std::string detail;
};

/// Gamma(a/2 + 1) / (2^(a/2) (1 + a)): coefficient of n^(1 - a/2) in the
/// expected total cost, for every a >= 1 (for even a this is (a/2)! / (2^(a/2)(1+a))).
HalfIntValue leading_constant(int a);

/// Exponent of n in the leading term, 1 - a/2.
double leading_power(int a);

/// sum_{j=0}^{a} sum_{i=1}^{n} n^-a C(a,j) (-1)^j n^j (i-1/2)^(a-j) i^(rising j) / (n+1)^(rising j).
///
/// Evaluated in closed form: (i - 1/2)^(a-j) is rewritten in falling powers of
/// (i - 1) and the i-sum telescopes, so the cost is independent of n.
/// Requires odd a (std::invalid_argument).
ExactRational lemma1_sum(std::int64_t n, int a);

/// A_i^(a) = (n^a (n+1)^(rising a))^-1 sum_j C(a,j)(-1)^j n^j (i-1/2)^(a-j) i^(rising j) (n+a)^(falling a-j).
ExactRational lemma2_weight(std::int64_t n, int a, std::int64_t i);

/// sum_i A_i^(a) C(n,i) i int_0^{t_i} x^(i-1) (1-x)^(n-i) dx, the inner
/// integral being I(t_i; i, n-i+1). Odd a; n within the exact size guard.
ExactRational lemma2_sum(std::int64_t n, int a);

/// b_{q1,p1}(a) on the diagonal q1 + p1 = (a-1)/2.
struct CoefficientSet {
    int a = 0;
    std::map<std::pair<int, int>, ExactRational> entries;
};

/// Odd a in [1, 15].
CoefficientSet b_coefficients(int a);

/// sum_{q1+p1=(a-1)/2} 2/sqrt(2 pi) B(a - p1 + 1/2, 3/2) b_{q1,p1}(a) against
/// the leading constant, both sides in exact rational * sqrt(pi) * sqrt(2) form.
struct Technical2bCheck {
    HalfIntValue lhs;
    HalfIntValue rhs;
    IdentityCheckResult result;
};
Technical2bCheck verify_technical2b(int a);

/// sum_{i=1}^{n} 2 i C(n,i) (1 - t_i)^(n-i+1) t_i^(i+c), in log space.
double lemma4_sum(std::int64_t n, double c);

/// 2/sqrt(2 pi) B(c + 3/2, 3/2) as a double (the n^(3/2) coefficient of lemma4_sum).
double lemma4_constant(double c);

enum class Theorem { EvenMoments = 1, OddMoments = 2 };

struct AsymptoticReport {
    Theorem theorem = Theorem::OddMoments;
    int a = 0;
    HalfIntValue constant;
    double constant_value = 0.0;
    double predicted_power = 0.0;
    std::vector<std::int64_t> n_grid;
    std::vector<double> measured;
    std::vector<double> normalized;  ///< measured / n^predicted_power
    std::vector<double> residual;    ///< measured - constant * n^predicted_power
    double fitted_exponent = 0.0;    ///< OLS slope of log|residual| vs log n (NaN when degenerate)
    bool degenerate = false;         ///< fewer than two residuals above the noise floor
    bool well_conditioned = false;   ///< >= 4 points spanning >= 2 decades
};

/// Ordinary least-squares slope of ys against xs.
double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

/// Measures the total moment on `n_grid` (float path), subtracts the leading
/// term and fits the remainder exponent. The grid must be strictly increasing
/// with at least two points; the theorem must match the parity of a.
AsymptoticReport remainder_diagnostic(Theorem theorem, int a, const std::vector<std::int64_t>& n_grid);

}  // namespace anchormoment
