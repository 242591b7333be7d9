#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "anchormoment/identities.hpp"
#include "anchormoment/output.hpp"

namespace anchormoment {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

/// Bad flag combination or value; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string library_version();

struct ExactOptions {
    std::int64_t n = 0;
    int a = 0;
    bool per_sensor = false;
};

struct SimulateOptions {
    std::int64_t n = 0;
    int a = 0;
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
};

struct AsymptoticOptions {
    int theorem = 0;
    int a = 0;
    std::vector<std::int64_t> grid;
};

struct LemmaOptions {
    int id = 0;
    std::optional<int> a;
    std::optional<std::int64_t> n;
    std::vector<std::int64_t> grid;
    std::optional<double> c;
};

struct IdentityRun {
    OutputRecord record;
    bool all_pass = false;
};

// Metadata other than version/seed (the timestamp) is filled in by run_cli.
OutputRecord cmd_exact(const ExactOptions& opts);
OutputRecord cmd_simulate(const SimulateOptions& opts);
OutputRecord cmd_asymptotic(const AsymptoticOptions& opts);
OutputRecord cmd_lemma(const LemmaOptions& opts);
IdentityRun cmd_identities(const std::string& suite);

/// Full command-line entry point: parses argv, writes the table to `out` and
/// diagnostics to `err`, returns the exit code (0 ok / 1 identity failure /
/// 2 usage / 3 size guard).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anchormoment
