#include "anchormoment/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace anchormoment {

void SimulationConfig::validate() const {
    if (n < 1) throw std::invalid_argument("simulation: n must be >= 1");
    if (a < 1) throw std::invalid_argument("simulation: a must be >= 1");
    if (trials < 1) throw std::invalid_argument("simulation: trials must be >= 1");
    if (workers < 1) throw std::invalid_argument("simulation: workers must be >= 1");
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

TrialRng TrialRng::for_trial(std::uint64_t seed, std::uint64_t trial_index) {
    return TrialRng(mix64(mix64(seed) ^ (trial_index * kGolden + kGolden)));
}

TrialRng::result_type TrialRng::operator()() {
    state_ += kGolden;
    return mix64(state_);
}

double TrialRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double displacement_cost(std::span<double> positions, int a) {
    std::sort(positions.begin(), positions.end());
    const double n = static_cast<double>(positions.size());
    double cost = 0.0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const double anchor = (2.0 * static_cast<double>(k) + 1.0) / (2.0 * n);
        const double d = std::fabs(positions[k] - anchor);
        double p = 1.0;
        for (int e = 0; e < a; ++e) {
            p *= d;
        }
        cost += p;
    }
    return cost;
}

double run_trial(std::int64_t n, int a, TrialRng& rng) {
    std::vector<double> positions(static_cast<std::size_t>(n));
    for (auto& x : positions) {
        x = rng.uniform();
    }
    return displacement_cost(positions, a);
}

namespace {

// Running moments of one block, merged with Chan's pairwise update.
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x) {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }

    static Moments merge(const Moments& l, const Moments& r) {
        if (l.count == 0.0) return r;
        if (r.count == 0.0) return l;
        Moments out;
        out.count = l.count + r.count;
        const double delta = r.mean - l.mean;
        out.mean = l.mean + delta * r.count / out.count;
        out.m2 = l.m2 + r.m2 + delta * delta * l.count * r.count / out.count;
        return out;
    }
};

constexpr std::int64_t kBlockSize = 4096;

Moments run_block(const SimulationConfig& config, std::int64_t block) {
    const std::int64_t begin = block * kBlockSize;
    const std::int64_t end = std::min(config.trials, begin + kBlockSize);
    std::vector<double> positions(static_cast<std::size_t>(config.n));
    Moments m;
    for (std::int64_t trial = begin; trial < end; ++trial) {
        TrialRng rng = TrialRng::for_trial(config.seed, static_cast<std::uint64_t>(trial));
        for (auto& x : positions) {
            x = rng.uniform();
        }
        m.push(displacement_cost(positions, config.a));
    }
    return m;
}

// Fixed-shape pairwise reduction over block index ranges.
Moments reduce(const std::vector<Moments>& blocks, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return blocks[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return Moments::merge(reduce(blocks, lo, mid), reduce(blocks, mid, hi));
}

}  // namespace

SimulationResult estimate(const SimulationConfig& config) {
    config.validate();
    const std::int64_t block_count = (config.trials + kBlockSize - 1) / kBlockSize;
    std::vector<Moments> blocks(static_cast<std::size_t>(block_count));
    const int workers = static_cast<int>(std::min<std::int64_t>(config.workers, block_count));
    if (workers <= 1) {
        for (std::int64_t b = 0; b < block_count; ++b) {
            blocks[static_cast<std::size_t>(b)] = run_block(config, b);
        }
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::int64_t b = w; b < block_count; b += workers) {
                    blocks[static_cast<std::size_t>(b)] = run_block(config, b);
                }
            });
        }
    }
    const Moments total = reduce(blocks, 0, blocks.size());
    SimulationResult out;
    out.trials = config.trials;
    out.seed = config.seed;
    out.mean = total.mean;
    const double variance = total.count > 1.0 ? total.m2 / (total.count - 1.0) : 0.0;
    out.std_error = std::sqrt(variance / total.count);
    out.ci95_low = out.mean - 1.96 * out.std_error;
    out.ci95_high = out.mean + 1.96 * out.std_error;
    return out;
}

}  // namespace anchormoment
