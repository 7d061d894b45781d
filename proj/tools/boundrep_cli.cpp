// boundrep: solve, generate, render, benchmark and cross-check bounded
// representation instances. Exit codes: 0 SAT / success, 1 UNSAT / failed
// check, 2 input error, 3 internal error.

#include "boundrep/bench.hpp"
#include "boundrep/generators.hpp"
#include "boundrep/json_io.hpp"
#include "boundrep/oracle_check.hpp"
#include "boundrep/render.hpp"
#include "boundrep/solve.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace boundrep;

namespace {

constexpr int kSat = 0;
constexpr int kUnsat = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// writes only once the whole text is known, so failures leave no file behind
void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InputError("cannot write " + out);
    f << text;
}

Instance load_instance(const std::string& path, const std::string& cls) {
    Instance inst = parse_instance(slurp(path));
    if (!cls.empty()) inst.cls = parse_graph_class(cls);
    return inst;
}

int cmd_solve(const std::string& path, const std::string& cls, bool trace, const std::string& out) {
    const Instance inst = load_instance(path, cls);
    SolveResult result;
    std::string trace_json;
    if (inst.cls == GraphClass::ProperInterval) {
        ProperTrace t;
        result = solve_bounded_proper(inst, trace ? &t : nullptr);
        if (trace) trace_json = trace_to_json(t);
    } else {
        IntervalTrace t;
        result = solve_bounded_interval(inst, trace ? &t : nullptr);
        if (trace) trace_json = trace_to_json(t);
    }
    if (result.sat()) {
        const CheckReport report = check_representation(inst, *result.representation);
        if (!report.ok()) {
            std::cerr << "internal error: solver output fails validation: " << report.violations.front().message << "\n";
            return kInternal;
        }
    }
    emit(result_to_json(result, trace_json), out);
    return result.sat() ? kSat : kUnsat;
}

int cmd_validate(const std::string& instance_path, const std::string& rep_path, const std::string& cls) {
    const Instance inst = load_instance(instance_path, cls);
    const Representation rep = parse_representation(slurp(rep_path));
    const CheckReport report = check_representation(inst, rep);
    nlohmann::json out;
    out["valid"] = report.ok();
    out["violations"] = nlohmann::json::array();
    for (const auto& v : report.violations)
        out["violations"].push_back({{"kind", to_string(v.kind)}, {"u", v.u}, {"v", v.v}, {"message", v.message}});
    std::cout << out.dump() << "\n";
    return report.ok() ? kSat : kUnsat;
}

int cmd_render(const std::string& instance_path, const std::string& rep_path, const std::string& out) {
    const Instance inst = parse_instance(slurp(instance_path));
    const Representation rep = parse_representation(slurp(rep_path));
    std::string svg;
    try {
        svg = render_svg(inst, rep);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    emit(svg, out);
    return kSat;
}

int cmd_bench(const std::string& solver, std::vector<int> sizes, std::uint64_t seed, int reps) {
    const GraphClass cls = parse_graph_class(solver);
    if (sizes.empty())
        sizes = cls == GraphClass::Interval ? std::vector<int>{10000, 20000, 40000, 80000}
                                            : std::vector<int>{500, 1000, 2000, 4000};
    if (!std::is_sorted(sizes.begin(), sizes.end())) throw InputError("sizes must be ascending");
    BenchReport report;
    try {
        report = run_bench(cls, sizes, seed, reps);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    nlohmann::json out;
    out["solver"] = to_string(cls);
    out["seed"] = seed;
    out["reps"] = reps;
    out["generator"] = cls == GraphClass::Interval ? "random-interval" : "random-proper";
    for (const auto& p : report.points) out["points"].push_back({{"n", p.n}, {"edges", p.edges}, {"seconds", p.seconds}});
    out["slope"] = report.slope;
    out["total_seconds"] = report.total_seconds;
    std::cout << out.dump(2) << "\n";
    return kSat;
}

int cmd_oracle_check(const std::string& cls, std::uint64_t seed, int max_n, int n5, int n6, int threads,
                     bool inject_bug) {
    if (max_n < 1 || max_n > 6) throw InputError("--max-n must be between 1 and 6");
    std::vector<GraphClass> classes;
    if (cls == "both") classes = {GraphClass::Interval, GraphClass::ProperInterval};
    else classes = {parse_graph_class(cls)};

    OracleCheckOptions opt;
    opt.seed = seed;
    opt.threads = threads;
    opt.inject_bug = inject_bug;
    opt.counts.per_graph_tiny = 10;
    opt.counts.per_graph_n4 = max_n >= 4 ? 100 : 0;
    opt.counts.n5 = max_n >= 5 ? n5 : 0;
    opt.counts.n6 = max_n >= 6 ? n6 : 0;

    std::size_t mismatches = 0;
    std::optional<Instance> first;
    for (GraphClass c : classes) {
        opt.cls = c;
        const OracleCheckReport r = oracle_check(opt);
        std::cout << to_string(c) << ": " << r.checked << " instances, " << r.sat << " sat, " << r.mismatches
                  << " mismatches\n";
        mismatches += r.mismatches;
        if (!first && r.first_counterexample) first = r.first_counterexample;
    }
    std::cout << mismatches << " mismatches\n";
    if (first) {
        std::cout << "first counterexample:\n" << instance_to_json(*first);
        return kUnsat;
    }
    return kSat;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded representations of interval and proper interval graphs"};
    app.require_subcommand(1);

    std::string cls, in_path, rep_path, out_path;
    bool trace = false;

    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance; prints a witness or the reason for UNSAT");
    solve_cmd->add_option("instance", in_path, "Instance JSON file, - for stdin")->required();
    solve_cmd->add_option("--class", cls, "Override the instance's class")->check(CLI::IsMember({"int", "proper-int"}));
    solve_cmd->add_flag("--trace", trace, "Attach the solver's intermediate results");
    solve_cmd->add_option("-o,--output", out_path);

    auto* validate_cmd = app.add_subcommand("validate", "Check a representation against an instance");
    validate_cmd->add_option("instance", in_path)->required();
    validate_cmd->add_option("representation", rep_path)->required();
    validate_cmd->add_option("--class", cls)->check(CLI::IsMember({"int", "proper-int"}));

    std::string kind;
    int n = 0;
    std::uint64_t seed = 1;
    bool sat_only = false;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
    gen_cmd->add_option("kind", kind, "random-interval | random-proper | repext | adversarial-bounds")->required();
    gen_cmd->add_option("n", n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_flag("--sat-only", sat_only, "Keep every bound around the generating intervals");
    gen_cmd->add_option("--class", cls)->check(CLI::IsMember({"int", "proper-int"}));
    gen_cmd->add_option("-o,--output", out_path);

    auto* render_cmd = app.add_subcommand("render", "Draw a representation as SVG");
    render_cmd->add_option("instance", in_path)->required();
    render_cmd->add_option("representation", rep_path, "Solver output or {\"intervals\": ...}")->required();
    render_cmd->add_option("-o,--output", out_path);

    std::string solver;
    std::vector<int> sizes;
    int reps = 3;
    auto* bench_cmd = app.add_subcommand("bench", "Time a solver and fit the log-log slope");
    bench_cmd->add_option("solver", solver)->required()->check(CLI::IsMember({"int", "proper-int"}));
    bench_cmd->add_option("--sizes", sizes, "At least four ascending sizes")->delimiter(',');
    bench_cmd->add_option("--seed", seed);
    bench_cmd->add_option("--reps", reps, "Runs per size, fastest kept")->check(CLI::PositiveNumber);

    std::string check_cls = "both";
    int max_n = 5, n5 = 500, n6 = 0, threads = 0;
    bool inject_bug = false;
    auto* check_cmd = app.add_subcommand("oracle-check", "Compare the solvers with the exhaustive oracle");
    check_cmd->add_option("--class", check_cls)->check(CLI::IsMember({"int", "proper-int", "both"}));
    check_cmd->add_option("--seed", seed);
    check_cmd->add_option("--max-n", max_n, "Largest instance size (1-6)");
    check_cmd->add_option("--n5", n5, "Sampled 5-vertex instances");
    check_cmd->add_option("--n6", n6, "Sampled 6-vertex instances");
    check_cmd->add_option("--threads", threads, "Workers, 0 for all (capped by BOUNDREP_THREADS)");
    check_cmd->add_flag("--inject-bug", inject_bug, "Self-test with a deliberately broken solver");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*solve_cmd) return cmd_solve(in_path, cls, trace, out_path);
        if (*validate_cmd) return cmd_validate(in_path, rep_path, cls);
        if (*gen_cmd) {
            GenOptions opt{parse_gen_kind(kind), n, seed, sat_only, cls.empty() ? GraphClass::Interval : parse_graph_class(cls)};
            emit(instance_to_json(generate(opt)), out_path);
            return kSat;
        }
        if (*render_cmd) return cmd_render(in_path, rep_path, out_path);
        if (*bench_cmd) return cmd_bench(solver, sizes, seed, reps);
        if (*check_cmd) return cmd_oracle_check(check_cls, seed, max_n, n5, n6, threads, inject_bug);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kInputError;
}
