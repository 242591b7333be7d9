#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "anchormoment/combinatorics.hpp"

using namespace anchormoment;

namespace {

ExactRational q(long v) { return ExactRational(v); }

// Number of cycles of a permutation of 0..n-1.
int count_cycles(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) seen[x] = true;
    }
    return cycles;
}

// Blocks counted over restricted growth strings of length n.
void count_partitions(std::vector<int>& rgs, std::size_t pos, int max_block, std::vector<long>& by_blocks) {
    if (pos == rgs.size()) {
        ++by_blocks[static_cast<std::size_t>(max_block + 1)];
        return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
        rgs[pos] = b;
        count_partitions(rgs, pos + 1, std::max(max_block, b), by_blocks);
    }
}

// Stirling permutations of 1,1,...,n,n: every value between the two copies of m exceeds m.
bool is_stirling_permutation(const std::vector<int>& p, int n) {
    for (int m = 1; m <= n; ++m) {
        const auto first = std::find(p.begin(), p.end(), m);
        const auto last = std::find(first + 1, p.end(), m);
        if (std::any_of(first, last, [m](int x) { return x < m; })) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("binomial matches Pascal's triangle") {
    std::vector<std::vector<BigInt>> pascal{{BigInt(1)}};
    for (int n = 1; n <= 80; ++n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, BigInt(1));
        for (int k = 1; k < n; ++k) row[static_cast<std::size_t>(k)] = pascal.back()[static_cast<std::size_t>(k - 1)] + pascal.back()[static_cast<std::size_t>(k)];
        pascal.push_back(row);
    }
    for (int n = 0; n <= 80; ++n) {
        for (int k = -2; k <= n + 2; ++k) {
            const BigInt expected = (k < 0 || k > n) ? BigInt(0) : pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            CHECK(binomial(n, k) == expected);
        }
    }
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("factorials and factorial powers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(rising_factorial(q(3), 4) == q(3 * 4 * 5 * 6));
    CHECK(falling_factorial(q(7), 3) == q(7 * 6 * 5));
    CHECK(falling_factorial(q(2), 5) == q(0));
    CHECK(rising_factorial(ExactRational(1, 2), 3) == ExactRational(15, 8));
    CHECK(rising_factorial(q(9), 0) == q(1));
    // x^(rising k) = (x + k - 1)^(falling k)
    for (int k = 0; k <= 8; ++k) {
        CHECK(rising_factorial(ExactRational(-7, 3), k) == falling_factorial(ExactRational(-7, 3) + q(k - 1), k));
    }
}

TEST_CASE("Stirling cycle numbers count permutations by cycles") {
    for (int n = 0; n <= 7; ++n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<long> by_cycles(static_cast<std::size_t>(n) + 1, 0);
        do {
            ++by_cycles[static_cast<std::size_t>(count_cycles(perm))];
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int k = 0; k <= n; ++k) CHECK(stirling_cycle(n, k) == by_cycles[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("Stirling subset numbers count set partitions by blocks") {
    CHECK(stirling_subset(0, 0) == 1);
    for (int n = 1; n <= 9; ++n) {
        std::vector<int> rgs(static_cast<std::size_t>(n), 0);
        std::vector<long> by_blocks(static_cast<std::size_t>(n) + 2, 0);
        count_partitions(rgs, 1, 0, by_blocks);
        for (int k = 0; k <= n; ++k) CHECK(stirling_subset(n, k) == by_blocks[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("second-order Eulerian numbers count Stirling permutations by descents") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> p;
        for (int m = 1; m <= n; ++m) p.insert(p.end(), {m, m});
        std::vector<long> by_k(static_cast<std::size_t>(n) + 1, 0);
        do {
            if (!is_stirling_permutation(p, n)) continue;
            int descents = 0;
            for (std::size_t j = 0; j < p.size(); ++j) {
                const int next = j + 1 < p.size() ? p[j + 1] : 0;
                if (p[j] > next) ++descents;
            }
            ++by_k[static_cast<std::size_t>(descents - 1)];
        } while (std::next_permutation(p.begin(), p.end()));
        for (int k = 0; k <= n; ++k) CHECK(eulerian_second_order(n, k) == by_k[static_cast<std::size_t>(k)]);
    }
    CHECK(eulerian_second_order(0, 0) == 1);
    CHECK(eulerian_second_order(2, 1) == 2);
}

TEST_CASE("triangle tables agree with the memoised accessors and their recurrences") {
    const TriangleTable cycle(TriangleKind::StirlingCycle, 30);
    const TriangleTable subset(TriangleKind::StirlingSubset, 30);
    const TriangleTable euler(TriangleKind::EulerianSecondOrder, 30);
    for (int n = 1; n <= 30; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(cycle.at(n, k) == stirling_cycle(n, k));
            CHECK(subset.at(n, k) == stirling_subset(n, k));
            CHECK(euler.at(n, k) == eulerian_second_order(n, k));
            CHECK(cycle.at(n, k) == cycle.at(n - 1, k - 1) + (n - 1) * cycle.at(n - 1, k));
            CHECK(subset.at(n, k) == subset.at(n - 1, k - 1) + k * subset.at(n - 1, k));
            CHECK(euler.at(n, k) == (k + 1) * euler.at(n - 1, k) + (2 * n - 1 - k) * euler.at(n - 1, k - 1));
        }
        CHECK(cycle.at(n, n + 1) == 0);
    }
    CHECK_THROWS_AS(cycle.at(31, 0), std::out_of_range);
    // row sums: n! and Bell numbers
    BigInt row(0);
    for (int k = 0; k <= 10; ++k) row += cycle.at(10, k);
    CHECK(row == factorial(10));
    row = 0;
    for (int k = 0; k <= 10; ++k) row += subset.at(10, k);
    CHECK(row == 115975);
}

TEST_CASE("memoised accessors grow past their initial size") {
    CHECK(stirling_subset(150, 149) == binomial(150, 2));
    CHECK(stirling_cycle(150, 149) == binomial(150, 2));
    CHECK(stirling_cycle(150, 150) == 1);
    CHECK(stirling_subset(150, 151) == 0);
}

TEST_CASE("finite differences annihilate low-degree polynomials") {
    for (int a = 1; a <= 10; ++a) {
        for (int m = 0; m < a; ++m) {
            CHECK(finite_difference(a, [m](std::int64_t j) { return q(j).pow(m); }) == q(0));
        }
        const ExactRational top = finite_difference(a, [a](std::int64_t j) { return q(j).pow(a); });
        CHECK(top == (a % 2 == 0 ? ExactRational(factorial(a)) : -ExactRational(factorial(a))));
    }
    CHECK(finite_difference(0, [](std::int64_t) { return q(5); }) == q(5));
}

TEST_CASE("basis expansions evaluate back to factorial powers") {
    for (int m = 0; m <= 12; ++m) {
        const auto rising = expand_rising_to_powers(m);
        const auto falling = expand_falling_to_powers(m);
        const auto to_falling = expand_power_to_falling(m);
        REQUIRE(rising.size() == static_cast<std::size_t>(m) + 1);
        for (const ExactRational& x : {ExactRational(-5, 2), ExactRational(0), ExactRational(7, 3), ExactRational(11)}) {
            ExactRational r(0), f(0), p(0);
            for (int l = m; l >= 0; --l) {
                r = r * x + rising[static_cast<std::size_t>(l)];
                f = f * x + falling[static_cast<std::size_t>(l)];
            }
            for (int l = 0; l <= m; ++l) p += to_falling[static_cast<std::size_t>(l)] * falling_factorial(x, l);
            CHECK(r == rising_factorial(x, m));
            CHECK(f == falling_factorial(x, m));
            CHECK(p == x.pow(m));
        }
    }
}
