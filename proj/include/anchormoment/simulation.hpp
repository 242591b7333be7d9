#pragma once

#include <cstdint>
#include <limits>
#include <span>

namespace anchormoment {

struct SimulationConfig {
    std::int64_t n = 1;
    int a = 1;
    std::int64_t trials = 1;
    std::uint64_t seed = 0;
    int workers = 1;

    /// Throws std::invalid_argument on non-positive fields.
    void validate() const;
};

struct SimulationResult {
    double mean = 0.0;
    double std_error = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
};

/// SplitMix64 stream. Each trial gets its own stream keyed by (seed, trial),
/// so results do not depend on how trials are spread over workers.
class TrialRng {
public:
    using result_type = std::uint64_t;

    explicit TrialRng(std::uint64_t state) : state_(state) {}
    static TrialRng for_trial(std::uint64_t seed, std::uint64_t trial_index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

private:
    std::uint64_t state_;
};

/// Sorts `positions` and returns sum_i |X_(i) - (2i-1)/(2n)|^a.
double displacement_cost(std::span<double> positions, int a);

/// One deployment of n uniform sensors moved to the anchors.
double run_trial(std::int64_t n, int a, TrialRng& rng);

/// Mean cost over `trials` independent deployments with a normal-approximation 95% interval.
SimulationResult estimate(const SimulationConfig& config);

}  // namespace anchormoment
