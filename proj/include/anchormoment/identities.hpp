#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anchormoment/asymptotics.hpp"

namespace anchormoment {

enum class IdentitySuite { All, Stirling, Eulerian, Beta, Gould, FiniteDiff, Technical2b };

/// Accepts all|stirling|eulerian|beta|gould|finite-diff|technical2b.
std::optional<IdentitySuite> parse_identity_suite(std::string_view name);
std::string_view identity_suite_name(IdentitySuite suite);

/// Runs every check of `suite`, one result per identity (per instance for gould/technical2b).
std::vector<IdentityCheckResult> run_identity_suite(IdentitySuite suite);

// Individual checks, exposed for the test suites.
IdentityCheckResult check_telescoping_sum();
IdentityCheckResult check_power_sum_polynomial();
IdentityCheckResult check_finite_difference_theorem();
IdentityCheckResult check_rising_expansion();
IdentityCheckResult check_falling_expansion();
IdentityCheckResult check_power_to_falling();
IdentityCheckResult check_stirling_formula_bounds();
IdentityCheckResult check_eulerian_row_sums();
IdentityCheckResult check_subset_near_diagonal();
IdentityCheckResult check_cycle_near_diagonal();
IdentityCheckResult check_beta_integer_formula();
IdentityCheckResult check_incomplete_beta_bounded();
IdentityCheckResult check_incomplete_beta_recurrence();
IdentityCheckResult check_incomplete_beta_complement();
IdentityCheckResult check_gould(int a);

}  // namespace anchormoment
