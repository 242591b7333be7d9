#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "anchormoment/rational.hpp"

namespace anchormoment {

/// C(n, k) for n >= 0; zero whenever k lies outside [0, n].
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

/// x (x+1) ... (x+k-1); the empty product for k = 0.
ExactRational rising_factorial(const ExactRational& x, std::int64_t k);

/// x (x-1) ... (x-k+1); the empty product for k = 0.
ExactRational falling_factorial(const ExactRational& x, std::int64_t k);

enum class TriangleKind { StirlingCycle, StirlingSubset, EulerianSecondOrder };

/// Dense lower-triangular table filled by the defining recurrence of `kind`.
///
///   StirlingCycle        [n,k] = [n-1,k-1] + (n-1) [n-1,k]
///   StirlingSubset       {n,k} = {n-1,k-1} + k {n-1,k}
///   EulerianSecondOrder  <<n,k>> = (k+1) <<n-1,k>> + (2n-1-k) <<n-1,k-1>>
///
/// All three have entry (0,0) = 1 and vanish outside 0 <= k <= n.
class TriangleTable {
public:
    TriangleTable(TriangleKind kind, std::int64_t max_row);

    TriangleKind kind() const { return kind_; }
    std::int64_t max_row() const { return max_row_; }

    /// Entry (n, k); zero for k outside [0, n]. Throws std::out_of_range if n > max_row.
    const BigInt& at(std::int64_t n, std::int64_t k) const;

private:
    TriangleKind kind_;
    std::int64_t max_row_;
    std::vector<std::vector<BigInt>> rows_;
};

/// Unsigned Stirling numbers of the first kind.
BigInt stirling_cycle(std::int64_t n, std::int64_t k);
/// Stirling numbers of the second kind.
BigInt stirling_subset(std::int64_t n, std::int64_t k);
/// Second-order Eulerian numbers <<n, k>>; row n sums to (2n)! / (n! 2^n).
BigInt eulerian_second_order(std::int64_t n, std::int64_t k);

/// Euler's finite difference sum_{j=0}^{a} C(a,j) (-1)^j f(j).
ExactRational finite_difference(std::int64_t a, const std::function<ExactRational(std::int64_t)>& f);

/// Coefficients c_0..c_m of x^(rising m) = sum_l c_l x^l.
std::vector<ExactRational> expand_rising_to_powers(std::int64_t m);

/// Coefficients of x^(falling m) in the power basis (signed Stirling cycle numbers).
std::vector<ExactRational> expand_falling_to_powers(std::int64_t m);

/// Coefficients d_0..d_m of x^m = sum_l d_l x^(falling l).
std::vector<ExactRational> expand_power_to_falling(std::int64_t m);

}  // namespace anchormoment
