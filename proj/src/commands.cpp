#include "anchormoment/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "CLI11.hpp"

#include "anchormoment/asymptotics.hpp"
#include "anchormoment/moments.hpp"
#include "anchormoment/simulation.hpp"

namespace anchormoment {

namespace {

OutputRecord make_record(std::string command) {
    OutputRecord rec;
    rec.command = std::move(command);
    rec.metadata.version = library_version();
    return rec;
}

void require_positive(std::int64_t value, const char* flag) {
    if (value < 1) throw UsageError(std::string(flag) + " must be >= 1");
}

void require_grid(const std::vector<std::int64_t>& grid, std::size_t min_points) {
    if (grid.size() < min_points) {
        throw UsageError("--grid needs at least " + std::to_string(min_points) + " point(s)");
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
        require_positive(grid[k], "--grid entries");
        if (k > 0 && grid[k] <= grid[k - 1]) throw UsageError("--grid must be strictly increasing");
    }
}

Cell exact_cell(const ExactRational& v) { return v.str(); }
Cell approx_cell(const ExactRational& v) { return approx_text(v); }

}  // namespace

std::string library_version() { return ANCHORMOMENT_VERSION; }

OutputRecord cmd_exact(const ExactOptions& opts) {
    require_positive(opts.n, "--n");
    require_positive(opts.a, "--a");
    const MomentBreakdown br = total_moment_exact(MomentQuery(opts.n, opts.a));

    OutputRecord rec = make_record("exact");
    rec.parameters = {{"n", opts.n}, {"a", std::int64_t{opts.a}}, {"per_sensor", std::int64_t{opts.per_sensor ? 1 : 0}}};
    if (!opts.per_sensor) {
        rec.columns = {"n", "a", "total", "total_approx"};
        rec.add_row({opts.n, std::int64_t{opts.a}, exact_cell(br.total), approx_cell(br.total)});
        return rec;
    }
    rec.columns = {"i", "t_i", "E_i", "E_i_approx", "signed_part", "signed_part_approx", "folded_part", "folded_part_approx"};
    for (const SensorMoment& s : br.per_sensor) {
        rec.add_row({s.i, exact_cell(s.t), exact_cell(s.e_total), approx_cell(s.e_total), exact_cell(s.e_signed_part),
                     approx_cell(s.e_signed_part), exact_cell(s.e_folded_part), approx_cell(s.e_folded_part)});
    }
    ExactRational signed_sum(0);
    ExactRational folded_sum(0);
    for (const SensorMoment& s : br.per_sensor) {
        signed_sum += s.e_signed_part;
        folded_sum += s.e_folded_part;
    }
    rec.add_row({std::string("total"), std::monostate{}, exact_cell(br.total), approx_cell(br.total), exact_cell(signed_sum),
                 approx_cell(signed_sum), exact_cell(folded_sum), approx_cell(folded_sum)});
    return rec;
}

OutputRecord cmd_simulate(const SimulateOptions& opts) {
    require_positive(opts.n, "--n");
    require_positive(opts.a, "--a");
    require_positive(opts.trials, "--trials");
    require_positive(opts.workers, "--workers");
    SimulationConfig cfg{opts.n, opts.a, opts.trials, opts.seed, opts.workers};
    const SimulationResult sim = estimate(cfg);

    OutputRecord rec = make_record("simulate");
    rec.metadata.seed = opts.seed;
    rec.parameters = {{"n", opts.n}, {"a", std::int64_t{opts.a}}, {"trials", opts.trials}};
    rec.columns = {"n", "a", "trials", "mean", "std_error", "ci95_low", "ci95_high", "exact", "exact_approx", "z_score"};
    std::vector<Cell> row{opts.n, std::int64_t{opts.a}, opts.trials, sim.mean, sim.std_error, sim.ci95_low, sim.ci95_high};
    if (opts.n <= kExactSizeGuard) {
        const ExactRational exact = total_moment_exact(MomentQuery(opts.n, opts.a)).total;
        const double z = sim.std_error > 0.0 ? (sim.mean - exact.to_double()) / sim.std_error : 0.0;
        row.insert(row.end(), {exact_cell(exact), approx_cell(exact), z});
    } else {
        row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}});
    }
    rec.add_row(std::move(row));
    return rec;
}

OutputRecord cmd_asymptotic(const AsymptoticOptions& opts) {
    if (opts.theorem != 1 && opts.theorem != 2) throw UsageError("--theorem must be 1 or 2");
    require_positive(opts.a, "--a");
    require_grid(opts.grid, 2);
    const Theorem th = opts.theorem == 1 ? Theorem::EvenMoments : Theorem::OddMoments;
    if ((th == Theorem::EvenMoments) != (opts.a % 2 == 0)) {
        throw UsageError(opts.theorem == 1 ? "--theorem 1 covers even a" : "--theorem 2 covers odd a");
    }
    const AsymptoticReport rep = remainder_diagnostic(th, opts.a, opts.grid);

    OutputRecord rec = make_record("asymptotic");
    rec.parameters = {{"theorem", std::int64_t{opts.theorem}},
                      {"a", std::int64_t{opts.a}},
                      {"leading_constant", rep.constant.str()},
                      {"predicted_power", rep.predicted_power},
                      {"well_conditioned", std::int64_t{rep.well_conditioned ? 1 : 0}}};
    rec.columns = {"n", "measured", "normalized", "leading_constant", "residual", "fitted_exponent"};
    for (std::size_t k = 0; k < rep.n_grid.size(); ++k) {
        rec.add_row({rep.n_grid[k], rep.measured[k], rep.normalized[k], rep.constant_value, rep.residual[k],
                     rep.fitted_exponent});
    }
    return rec;
}

OutputRecord cmd_lemma(const LemmaOptions& opts) {
    if (opts.id != 1 && opts.id != 2 && opts.id != 4) throw UsageError("--id must be 1, 2 or 4");
    if (opts.n && !opts.grid.empty()) throw UsageError("give either --n or --grid, not both");
    if (!opts.n && opts.grid.empty()) throw UsageError("one of --n or --grid is required");
    std::vector<std::int64_t> grid = opts.n ? std::vector<std::int64_t>{*opts.n} : opts.grid;
    require_grid(grid, 1);

    OutputRecord rec = make_record("lemma");
    if (opts.id == 4) {
        if (opts.a) throw UsageError("--a does not apply to --id 4");
        if (!opts.c) throw UsageError("--id 4 requires --c");
        if (!(*opts.c >= 0.0) || !std::isfinite(*opts.c)) throw UsageError("--c must be a finite value >= 0");
        const double constant = lemma4_constant(*opts.c);
        rec.parameters = {{"id", std::int64_t{4}}, {"c", *opts.c}};
        rec.columns = {"n", "value", "normalized", "constant"};
        for (std::int64_t n : grid) {
            const double v = lemma4_sum(n, *opts.c);
            rec.add_row({n, v, v / std::pow(static_cast<double>(n), 1.5), constant});
        }
        return rec;
    }

    if (opts.c) throw UsageError("--c applies only to --id 4");
    if (!opts.a) throw UsageError("--id " + std::to_string(opts.id) + " requires --a");
    const int a = *opts.a;
    if (a < 1 || a % 2 == 0) throw UsageError("--a must be odd and >= 1 for lemmas 1 and 2");
    rec.parameters = {{"id", std::int64_t{opts.id}}, {"a", std::int64_t{a}}};
    rec.columns = {"n", "value", "value_approx", "normalized"};
    for (std::int64_t n : grid) {
        const ExactRational v = opts.id == 1 ? lemma1_sum(n, a) : lemma2_sum(n, a);
        const double normalized = std::pow(static_cast<double>(n), (a - 1) / 2.0) * std::fabs(v.to_double());
        rec.add_row({n, exact_cell(v), approx_cell(v), normalized});
    }
    return rec;
}

IdentityRun cmd_identities(const std::string& suite) {
    const auto parsed = parse_identity_suite(suite);
    if (!parsed) throw UsageError("unknown suite '" + suite + "'");
    IdentityRun run{make_record("identities"), true};
    run.record.parameters = {{"suite", std::string(identity_suite_name(*parsed))}};
    run.record.columns = {"name", "identity", "pass", "exact", "residual", "detail"};
    for (const IdentityCheckResult& r : run_identity_suite(*parsed)) {
        run.all_pass = run.all_pass && r.pass;
        run.record.add_row({r.name, r.identity, std::int64_t{r.pass ? 1 : 0}, std::int64_t{r.exact ? 1 : 0}, r.residual,
                            r.detail});
    }
    return run;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Expected a-th power displacement of uniformly deployed sensors", "anchormoment"};
    app.require_subcommand(1);
    app.set_version_flag("--version", library_version());

    std::string format = "csv";
    bool no_timestamp = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp from the metadata");

    ExactOptions exact;
    auto* exact_cmd = app.add_subcommand("exact", "Exact rational total moment");
    exact_cmd->add_option("--n", exact.n, "Number of sensors")->required();
    exact_cmd->add_option("--a", exact.a, "Moment order")->required();
    exact_cmd->add_flag("--per-sensor", exact.per_sensor, "Also emit the per-sensor table");

    SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of the total moment");
    sim_cmd->add_option("--n", sim.n, "Number of sensors")->required();
    sim_cmd->add_option("--a", sim.a, "Moment order")->required();
    sim_cmd->add_option("--trials", sim.trials, "Number of deployments")->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
    sim_cmd->add_option("--workers", sim.workers, "Worker threads (does not change the result)")->capture_default_str();

    AsymptoticOptions asym;
    auto* asym_cmd = app.add_subcommand("asymptotic", "Leading-term check and remainder fit");
    asym_cmd->add_option("--theorem", asym.theorem, "1 (even a) or 2 (odd a)")->required();
    asym_cmd->add_option("--a", asym.a, "Moment order")->required();
    asym_cmd->add_option("--grid", asym.grid, "Increasing n values, comma separated")->required()->delimiter(',');

    LemmaOptions lemma;
    auto* lemma_cmd = app.add_subcommand("lemma", "Lemma-level sums with their normalisation");
    lemma_cmd->add_option("--id", lemma.id, "1, 2 or 4")->required();
    lemma_cmd->add_option("--a", lemma.a, "Moment order (ids 1 and 2)");
    lemma_cmd->add_option("--n", lemma.n, "Single n");
    lemma_cmd->add_option("--grid", lemma.grid, "Increasing n values, comma separated")->delimiter(',');
    lemma_cmd->add_option("--c", lemma.c, "Exponent shift (id 4)");

    std::string suite = "all";
    auto* id_cmd = app.add_subcommand("identities", "Run the identity checks");
    id_cmd->add_option("--suite", suite, "all|stirling|eulerian|beta|gould|finite-diff|technical2b")->capture_default_str();

    for (auto* sub : {exact_cmd, sim_cmd, asym_cmd, lemma_cmd, id_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << library_version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const OutputFormat fmt = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    try {
        OutputRecord rec;
        int code = kExitOk;
        if (*exact_cmd) {
            rec = cmd_exact(exact);
        } else if (*sim_cmd) {
            rec = cmd_simulate(sim);
        } else if (*asym_cmd) {
            rec = cmd_asymptotic(asym);
        } else if (*lemma_cmd) {
            rec = cmd_lemma(lemma);
        } else {
            IdentityRun run = cmd_identities(suite);
            rec = std::move(run.record);
            if (!run.all_pass) {
                err << "identity check failed\n";
                code = kExitIdentityFailure;
            }
        }
        if (!no_timestamp) rec.metadata.timestamp = current_timestamp_utc();
        write_record(out, rec, fmt);
        return code;
    } catch (const SizeGuardError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("anchormoment");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace anchormoment
