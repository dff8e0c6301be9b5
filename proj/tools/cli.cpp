#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "contract_sched/bounds.hpp"
#include "contract_sched/generators.hpp"
#include "contract_sched/makespan.hpp"
#include "contract_sched/metrics.hpp"
#include "contract_sched/report_io.hpp"
#include "contract_sched/schedule_io.hpp"
#include "contract_sched/sweep.hpp"
#include "contract_sched/transforms.hpp"
#include "contract_sched/verify.hpp"

namespace contract_sched::cli {

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot write " + path);
    file << text;
}

// Writes to `path`, or to `out` when no path was given.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string fmt12(double v) { return fmt::format("{:.12g}", v); }

// One row per critical time: time, S sorted (';'-separated), reference, ratio.
std::string series_csv(const MeasureReport& report, const std::string& schedule_path, Solver solver) {
    std::string csv = fmt::format("# measure={} solver={} schedule={} value={}\n", to_string(report.measure), to_string(solver),
                                  schedule_path, fmt12(report.value));
    csv += fmt::format("time,s_sorted,{},ratio\n", report.measure == Measure::Deficiency ? "opt" : "smallest");
    for (const auto& p : report.series) {
        std::string sorted;
        for (std::size_t i = 0; i < p.sorted.size(); ++i) sorted += (i ? ";" : "") + fmt12(p.sorted[i]);
        csv += fmt::format("{},{},{},{}\n", fmt12(p.time), sorted, fmt12(p.reference), fmt12(p.ratio));
    }
    return csv;
}

struct GenArgs {
    std::size_t n = 1, m = 1, k = 0;
    std::string family = "exp";
    std::string base = "auto-def";
    std::string out;
};

struct EvalArgs {
    std::string schedule, measure = "def", solver = "exact", csv;
    std::optional<double> from, to;
    bool include_unserved = false, series = false;
};

struct BoundsArgs {
    std::string name;
    std::size_t n = 1, m = 1;
    std::optional<double> b;
    bool list = false;
};

struct MakespanArgs {
    std::vector<double> sizes;
    std::size_t m = 1;
    std::string solver = "exact";
};

struct NormalizeArgs {
    std::string schedule, out, trace;
    bool reduce_pairs = false;
};

struct SweepArgs {
    int figure = 1;
    std::string csv;
};

struct VerifyArgs {
    std::uint64_t seed = VerifyOptions{}.seed;
    std::optional<double> tolerance;
    bool acceptance_only = false;
    std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    double b = 0.0;
    if (a.base == "auto-def")
        b = deficiency_optimal_base(a.n, a.m);
    else if (a.base == "auto-acc")
        b = acceleration_optimal_base(a.n, a.m);
    else
        b = std::stod(a.base);  // validated by the option check
    emit(out, a.out, write_schedule(exponential_schedule({a.n, a.m, b, a.k})));
    return kOk;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
    const auto schedule = load_schedule(a.schedule);
    const Measure measure = a.measure == "acc" ? Measure::Acceleration : a.measure == "perf" ? Measure::Performance : Measure::Deficiency;
    const Solver solver = a.solver == "lpt" ? Solver::Lpt : Solver::Exact;
    Window window;
    window.from = a.from;
    window.to = a.to;
    window.include_unserved = a.include_unserved;
    const auto report = evaluate(schedule, measure, window, solver);
    if (!a.csv.empty()) write_file(a.csv, series_csv(report, a.schedule, solver));
    out << dump(to_json(report, a.series));
    return kOk;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
    if (a.list) {
        for (const auto& name : bound_names()) out << name << "\n";
        return kOk;
    }
    out << dump(to_json(bound_by_name(a.name, a.n, a.m, a.b)));
    return kOk;
}

int cmd_makespan(const MakespanArgs& a, std::ostream& out) {
    const MakespanInstance instance(a.sizes, a.m);
    Assignment result;
    if (a.solver == "lpt") {
        result = lpt_makespan(instance);
    } else if (a.solver == "greedy") {
        std::vector<std::size_t> order(a.sizes.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        result = greedy_in_order(instance, order);
    } else {
        result = exact_makespan(instance);
    }
    auto j = to_json(result);
    j["solver"] = a.solver;
    j["lower_bound"] = instance.lower_bound();
    out << dump(j);
    return kOk;
}

int cmd_normalize(const NormalizeArgs& a, std::ostream& out) {
    const auto input = load_schedule(a.schedule);
    auto trace = normalize(input);
    if (a.reduce_pairs) {
        auto reduced = reduce_consecutive_pairs(trace.output);
        trace.steps.insert(trace.steps.end(), reduced.steps.begin(), reduced.steps.end());
        trace.output = reduced.output;
    }
    if (!a.trace.empty()) write_file(a.trace, dump(to_json(trace)));
    emit(out, a.out, write_schedule(trace.output));
    return kOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    emit(out, a.csv, to_csv(figure_table(a.figure)));
    return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    VerifyOptions options;
    options.seed = a.seed;
    options.tolerance = a.tolerance;
    auto checks = acceptance_checks(options);
    if (!a.acceptance_only) {
        auto more = property_checks(options);
        checks.insert(checks.end(), more.begin(), more.end());
    }
    emit(out, a.out, dump(to_json(checks, options)));
    return all_passed(checks) ? kOk : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Contract schedules on parallel processors: generation, measures, bounds and figure data", "contract_sched"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an exponential schedule as JSON");
    gen_cmd->add_option("--n", gen.n, "Number of problems")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--m", gen.m, "Number of processors")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--family", gen.family, "Schedule family")->check(CLI::IsMember({"exp"}));
    gen_cmd->add_option("--base", gen.base, "auto-def (deficiency-optimal), auto-acc (acceleration-optimal) or a number > 1")
        ->check(CLI::IsMember({"auto-def", "auto-acc"}) | CLI::Number);
    gen_cmd->add_option("--k", gen.k, "Number of contracts (0: 8(n+m))");
    gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a measure of a schedule");
    eval_cmd->add_option("--schedule", eval.schedule, "Schedule JSON file")->required();
    eval_cmd->add_option("--measure", eval.measure, "acc, perf or def")->check(CLI::IsMember({"acc", "perf", "def"}));
    eval_cmd->add_option("--solver", eval.solver, "Makespan solver for def")->check(CLI::IsMember({"exact", "lpt"}));
    eval_cmd->add_option("--from", eval.from, "Earliest critical time to include");
    eval_cmd->add_option("--to", eval.to, "Latest critical time to include");
    eval_cmd->add_flag("--include-unserved", eval.include_unserved, "Count times where a problem is still unserved (value becomes inf)");
    eval_cmd->add_flag("--series", eval.series, "Include the per-critical-time series in the JSON report");
    eval_cmd->add_option("--csv", eval.csv, "Write the per-critical-time series as CSV");

    BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate a closed-form bound");
    bounds_cmd->add_option("--name", bounds.name, "Bound name (see --list)");
    bounds_cmd->add_option("--n", bounds.n, "Number of problems")->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--m", bounds.m, "Number of processors")->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--b", bounds.b, "Base, for bounds that take one");
    bounds_cmd->add_flag("--list", bounds.list, "List bound names");

    MakespanArgs makespan;
    auto* makespan_cmd = app.add_subcommand("makespan", "Schedule job sizes on identical processors");
    makespan_cmd->add_option("--sizes", makespan.sizes, "Job sizes")->required()->delimiter(',');
    makespan_cmd->add_option("--m", makespan.m, "Number of processors")->required()->check(CLI::PositiveNumber);
    makespan_cmd->add_option("--solver", makespan.solver, "exact, lpt or greedy")->check(CLI::IsMember({"exact", "lpt", "greedy"}));

    NormalizeArgs norm;
    auto* norm_cmd = app.add_subcommand("normalize", "Normalize a single-processor schedule");
    norm_cmd->add_option("--schedule", norm.schedule, "Schedule JSON file")->required();
    norm_cmd->add_option("--out", norm.out, "Output schedule file (default: stdout)");
    norm_cmd->add_option("--trace", norm.trace, "Write the transformation trace as JSON");
    norm_cmd->add_flag("--reduce-pairs", norm.reduce_pairs, "Then shorten same-problem runs (two problems only)");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Emit figure data as CSV");
    sweep_cmd->add_option("--figure", sweep.figure, "Figure 1, 2 or 3")->required()->check(CLI::Range(1, 3));
    sweep_cmd->add_option("--csv", sweep.csv, "Output file (default: stdout)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria and property suites");
    verify_cmd->add_option("--seed", verify.seed, "Seed for the random suites");
    verify_cmd->add_option("--tolerance", verify.tolerance, "Override every check's tolerance")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--acceptance-only", verify.acceptance_only, "Skip the property suites");
    verify_cmd->add_option("--out", verify.out, "Report file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*eval_cmd) return cmd_eval(eval, out);
        if (*bounds_cmd) {
            if (!bounds.list && bounds.name.empty()) {
                err << "bounds: --name or --list is required\n";
                return kUsageError;
            }
            return cmd_bounds(bounds, out);
        }
        if (*makespan_cmd) return cmd_makespan(makespan, out);
        if (*norm_cmd) return cmd_normalize(norm, out);
        if (*sweep_cmd) return cmd_sweep(sweep, out);
        if (*verify_cmd) return cmd_verify(verify, out);
    } catch (const std::exception& e) {
        // domain errors and anything the modules reject
        err << nlohmann::json{{"error", {{"type", "domain_error"}, {"message", e.what()}}}}.dump() << "\n";
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace contract_sched::cli
