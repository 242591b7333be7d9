#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "anchormoment/asymptotics.hpp"
#include "anchormoment/combinatorics.hpp"
#include "anchormoment/commands.hpp"
#include "anchormoment/identities.hpp"
#include "anchormoment/moments.hpp"
#include "anchormoment/simulation.hpp"
#include "anchormoment/special_functions.hpp"

namespace py = pybind11;
using namespace anchormoment;

namespace {


// Big integers cross the boundary as decimal text.
py::object big(const BigInt& value) { return py::module_::import("builtins").attr("int")(value.get_str()); }

py::dict sensor_dict(const SensorMoment& s) {
    py::dict d;
    d["i"] = s.i;
    d["t"] = s.t.str();
    d["total"] = s.e_total.str();
    d["signed_part"] = s.e_signed_part.str();
    d["folded_part"] = s.e_folded_part.str();
    return d;
}

py::dict check_dict(const IdentityCheckResult& r) {
    py::dict d;
    d["name"] = r.name;
    d["identity"] = r.identity;
    d["pass"] = r.pass;
    d["exact"] = r.exact;
    d["residual"] = r.residual;
    d["detail"] = r.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Expected a-th power displacement of uniformly deployed sensors: exact, float and Monte Carlo.";
    m.attr("__version__") = library_version();
    m.attr("EXACT_SIZE_GUARD") = kExactSizeGuard;
    m.attr("FLOAT_SIZE_GUARD") = kFloatSizeGuard;

    py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_ValueError);

    m.def("binomial", [](std::int64_t n, std::int64_t k) { return big(binomial(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("stirling_cycle", [](std::int64_t n, std::int64_t k) { return big(stirling_cycle(n, k)); });
    m.def("stirling_subset", [](std::int64_t n, std::int64_t k) { return big(stirling_subset(n, k)); });
    m.def("eulerian_second_order", [](std::int64_t n, std::int64_t k) { return big(eulerian_second_order(n, k)); });

    m.def(
        "incomplete_beta_exact",
        [](const std::string& z, std::int64_t c, std::int64_t d) {
            return incomplete_beta_regularized_exact({ExactRational::parse(z), c, d}).str();
        },
        py::arg("z"), py::arg("c"), py::arg("d"), "I(z; c, d) with z given as \"p/q\"; returns \"p/q\".");
    m.def("incomplete_beta_float", &incomplete_beta_float, py::arg("z"), py::arg("c"), py::arg("d"));
    m.def("log_beta", &log_beta, py::arg("c"), py::arg("d"));

    m.def(
        "per_sensor_moment_exact",
        [](std::int64_t n, int a, std::int64_t i) { return sensor_dict(per_sensor_moment_exact(MomentQuery(n, a), i)); },
        py::arg("n"), py::arg("a"), py::arg("i"));
    m.def(
        "total_moment_exact",
        [](std::int64_t n, int a, bool per_sensor) {
            MomentBreakdown br;
            {
                py::gil_scoped_release release;
                br = total_moment_exact(MomentQuery(n, a));
            }
            py::dict d;
            d["n"] = br.n;
            d["a"] = br.a;
            d["total"] = br.total.str();
            if (per_sensor) {
                py::list rows;
                for (const auto& s : br.per_sensor) rows.append(sensor_dict(s));
                d["per_sensor"] = rows;
            }
            return d;
        },
        py::arg("n"), py::arg("a"), py::arg("per_sensor") = false);
    m.def(
        "total_moment_float", [](std::int64_t n, int a) { return total_moment_float(MomentQuery(n, a)).total; },
        py::arg("n"), py::arg("a"), py::call_guard<py::gil_scoped_release>());

    m.def("leading_constant", [](int a) {
        const HalfIntValue c = leading_constant(a);
        return py::make_tuple(c.str(), c.to_double());
    });
    m.def("lemma1_sum", [](std::int64_t n, int a) { return lemma1_sum(n, a).str(); }, py::arg("n"), py::arg("a"));
    m.def(
        "lemma2_sum",
        [](std::int64_t n, int a) {
            py::gil_scoped_release release;
            return lemma2_sum(n, a).str();
        },
        py::arg("n"), py::arg("a"));
    m.def("lemma4_sum", &lemma4_sum, py::arg("n"), py::arg("c"), py::call_guard<py::gil_scoped_release>());
    m.def("lemma4_constant", &lemma4_constant, py::arg("c"));
    m.def("verify_technical2b", [](int a) {
        const Technical2bCheck check = verify_technical2b(a);
        py::dict d = check_dict(check.result);
        d["lhs"] = check.lhs.str();
        d["rhs"] = check.rhs.str();
        return d;
    });
    m.def(
        "remainder_diagnostic",
        [](int theorem, int a, const std::vector<std::int64_t>& grid) {
            if (theorem != 1 && theorem != 2) throw std::invalid_argument("theorem must be 1 or 2");
            AsymptoticReport rep;
            {
                py::gil_scoped_release release;
                rep = remainder_diagnostic(theorem == 1 ? Theorem::EvenMoments : Theorem::OddMoments, a, grid);
            }
            py::dict d;
            d["constant"] = rep.constant.str();
            d["constant_value"] = rep.constant_value;
            d["predicted_power"] = rep.predicted_power;
            d["n"] = rep.n_grid;
            d["measured"] = rep.measured;
            d["normalized"] = rep.normalized;
            d["residual"] = rep.residual;
            d["fitted_exponent"] = rep.fitted_exponent;
            d["degenerate"] = rep.degenerate;
            d["well_conditioned"] = rep.well_conditioned;
            return d;
        },
        py::arg("theorem"), py::arg("a"), py::arg("grid"));

    m.def(
        "run_identity_suite",
        [](const std::string& suite) {
            const auto parsed = parse_identity_suite(suite);
            if (!parsed) throw std::invalid_argument("unknown suite '" + suite + "'");
            py::list out;
            for (const auto& r : run_identity_suite(*parsed)) out.append(check_dict(r));
            return out;
        },
        py::arg("suite") = "all");

    m.def(
        "simulate",
        [](std::int64_t n, int a, std::int64_t trials, std::uint64_t seed, int workers) {
            SimulationResult r;
            {
                py::gil_scoped_release release;
                r = estimate({n, a, trials, seed, workers});
            }
            py::dict d;
            d["mean"] = r.mean;
            d["std_error"] = r.std_error;
            d["ci95_low"] = r.ci95_low;
            d["ci95_high"] = r.ci95_high;
            d["trials"] = r.trials;
            d["seed"] = r.seed;
            return d;
        },
        py::arg("n"), py::arg("a"), py::arg("trials"), py::arg("seed") = 1, py::arg("workers") = 1);

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
