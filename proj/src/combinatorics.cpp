#include "anchormoment/combinatorics.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace anchormoment {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be non-negative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

ExactRational rising_factorial(const ExactRational& x, std::int64_t k) {
    if (k < 0) {
        throw std::invalid_argument("rising_factorial: k must be non-negative");
    }
    ExactRational out(1);
    for (std::int64_t m = 0; m < k; ++m) {
        out *= x + ExactRational(static_cast<long>(m));
    }
    return out;
}

ExactRational falling_factorial(const ExactRational& x, std::int64_t k) {
    if (k < 0) {
        throw std::invalid_argument("falling_factorial: k must be non-negative");
    }
    ExactRational out(1);
    for (std::int64_t m = 0; m < k; ++m) {
        out *= x - ExactRational(static_cast<long>(m));
        if (out.is_zero()) {
            break;
        }
    }
    return out;
}

TriangleTable::TriangleTable(TriangleKind kind, std::int64_t max_row) : kind_(kind), max_row_(max_row) {
    if (max_row < 0) {
        throw std::invalid_argument("TriangleTable: max_row must be non-negative");
    }
    rows_.resize(static_cast<std::size_t>(max_row) + 1);
    rows_[0] = {BigInt(1)};
    for (std::int64_t n = 1; n <= max_row; ++n) {
        const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
        auto prev_at = [&](std::int64_t k) -> BigInt {
            return (k < 0 || k > n - 1) ? BigInt(0) : prev[static_cast<std::size_t>(k)];
        };
        for (std::int64_t k = 0; k <= n; ++k) {
            BigInt value;
            switch (kind) {
                case TriangleKind::StirlingCycle:
                    value = prev_at(k - 1) + (n - 1) * prev_at(k);
                    break;
                case TriangleKind::StirlingSubset:
                    value = prev_at(k - 1) + k * prev_at(k);
                    break;
                case TriangleKind::EulerianSecondOrder:
                    value = (k + 1) * prev_at(k) + (2 * n - 1 - k) * prev_at(k - 1);
                    break;
            }
            row[static_cast<std::size_t>(k)] = value;
        }
    }
}

const BigInt& TriangleTable::at(std::int64_t n, std::int64_t k) const {
    static const BigInt zero(0);
    if (n < 0 || n > max_row_) {
        throw std::out_of_range("TriangleTable: row " + std::to_string(n) + " outside table");
    }
    if (k < 0 || k > n) {
        return zero;
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

// Shared memoized tables, grown by doubling. Readers copy the entry out
// under the lock, so concurrent callers never observe a table mid-rebuild.
class TableCache {
public:
    explicit TableCache(TriangleKind kind) : kind_(kind) {}

    BigInt get(std::int64_t n, std::int64_t k) {
        if (n < 0) {
            throw std::invalid_argument("triangle entry: n must be non-negative");
        }
        if (k < 0 || k > n) {
            return 0;
        }
        std::lock_guard<std::mutex> lock(mutex_);
        if (!table_ || table_->max_row() < n) {
            std::int64_t rows = table_ ? table_->max_row() : 16;
            while (rows < n) {
                rows *= 2;
            }
            table_ = std::make_unique<TriangleTable>(kind_, rows);
        }
        return table_->at(n, k);
    }

private:
    TriangleKind kind_;
    std::mutex mutex_;
    std::unique_ptr<TriangleTable> table_;
};

TableCache& cache_for(TriangleKind kind) {
    static TableCache cycle(TriangleKind::StirlingCycle);
    static TableCache subset(TriangleKind::StirlingSubset);
    static TableCache eulerian(TriangleKind::EulerianSecondOrder);
    switch (kind) {
        case TriangleKind::StirlingCycle:
            return cycle;
        case TriangleKind::StirlingSubset:
            return subset;
        case TriangleKind::EulerianSecondOrder:
            break;
    }
    return eulerian;
}

}  // namespace

BigInt stirling_cycle(std::int64_t n, std::int64_t k) { return cache_for(TriangleKind::StirlingCycle).get(n, k); }

BigInt stirling_subset(std::int64_t n, std::int64_t k) { return cache_for(TriangleKind::StirlingSubset).get(n, k); }

BigInt eulerian_second_order(std::int64_t n, std::int64_t k) {
    return cache_for(TriangleKind::EulerianSecondOrder).get(n, k);
}

ExactRational finite_difference(std::int64_t a, const std::function<ExactRational(std::int64_t)>& f) {
    if (a < 0) {
        throw std::invalid_argument("finite_difference: order must be non-negative");
    }
    ExactRational sum(0);
    for (std::int64_t j = 0; j <= a; ++j) {
        const ExactRational term = ExactRational(binomial(a, j)) * f(j);
        if (j % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

std::vector<ExactRational> expand_rising_to_powers(std::int64_t m) {
    if (m < 0) {
        throw std::invalid_argument("expand_rising_to_powers: m must be non-negative");
    }
    std::vector<ExactRational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(m) + 1);
    for (std::int64_t l = 0; l <= m; ++l) {
        coeffs.emplace_back(stirling_cycle(m, l));
    }
    return coeffs;
}

std::vector<ExactRational> expand_falling_to_powers(std::int64_t m) {
    auto coeffs = expand_rising_to_powers(m);
    for (std::int64_t l = 0; l <= m; ++l) {
        if ((m - l) % 2 != 0) {
            coeffs[static_cast<std::size_t>(l)] = -coeffs[static_cast<std::size_t>(l)];
        }
    }
    return coeffs;
}

std::vector<ExactRational> expand_power_to_falling(std::int64_t m) {
    if (m < 0) {
        throw std::invalid_argument("expand_power_to_falling: m must be non-negative");
    }
    std::vector<ExactRational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(m) + 1);
    for (std::int64_t l = 0; l <= m; ++l) {
        coeffs.emplace_back(stirling_subset(m, l));
    }
    return coeffs;
}

}  // namespace anchormoment
