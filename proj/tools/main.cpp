// Command-line front end: construct, verify and analyze production schemes.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prodsched/cyclic.hpp"
#include "prodsched/euclid.hpp"
#include "prodsched/harmonic.hpp"
#include "prodsched/io.hpp"
#include "prodsched/timing.hpp"
#include "prodsched/verifier.hpp"

namespace {

constexpr const char* kVersion = "prodsched 1.0.0";

using nlohmann::json;
using namespace prodsched;

struct PlanOptions {
    std::string strategy;
    long long r1 = 0, r2 = 0;
    std::string t1 = "1", t2 = "2";
    std::string agent_order = "type1-first";
    std::string spec_path;
    std::string times, counts;
    std::string format = "json";
    std::string matrix_out, type_matrix_out, out;
    int zero_class = 1;
};

struct VerifyOptions {
    std::string spec_path, matrix_path, scheme_path, out;
};

struct PartitionOptions {
    std::string list;
    std::size_t max_elements = kDefaultSplitBound;
    std::string out;
};

struct TimingOptions {
    long long r1 = 0, r2 = 0;
    std::string T = "2", epsilon = "0";
    std::string strategy = "euclid";
    std::string out;
};

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> values;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        values.push_back(Rational::from_string(item));
    if (values.empty()) throw ParseError("empty list");
    return values;
}

std::vector<long long> parse_count_list(const std::string& text) {
    std::vector<long long> values;
    for (const auto& r : parse_rational_list(text)) {
        if (!r.is_integer()) throw ParseError("counts must be integers");
        values.push_back(static_cast<long long>(r.num()));
    }
    return values;
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty())
        std::cout << payload;
    else
        write_file(out_path, payload);
}

AgentOrder order_from_string(const std::string& name) {
    if (name == "type1-first") return AgentOrder::Type1First;
    if (name == "type2-first") return AgentOrder::Type2First;
    throw ParseError("agent order must be type1-first or type2-first");
}

int run_plan(const PlanOptions& opt) {
    std::optional<AssignmentMatrix> matrix;
    json summary;
    std::optional<ProblemSpec> spec;

    if (opt.strategy == "euclid") {
        if (opt.r1 <= 0 || opt.r2 <= 0)
            throw ValidationError("plan --strategy euclid needs --r1 and --r2");
        AgentOrder order = order_from_string(opt.agent_order);
        EuclideanScheme scheme =
            build_euclidean(opt.r1, opt.r2, order, Rational::from_string(opt.t1),
                            Rational::from_string(opt.t2));
        summary = euclid_plan_to_json(scheme, order);
        spec = scheme.spec;
        matrix = std::move(scheme.matrix);
    } else if (opt.strategy == "cyclic") {
        if (!opt.spec_path.empty()) {
            spec = spec_from_json(json::parse(read_file(opt.spec_path)));
        } else if (!opt.times.empty() && !opt.counts.empty()) {
            auto times = parse_rational_list(opt.times);
            auto counts = parse_count_list(opt.counts);
            if (times.size() != counts.size())
                throw ParseError("--times and --counts must have equal length");
            std::vector<AgentClass> classes;
            for (std::size_t i = 0; i < times.size(); ++i)
                classes.push_back({times[i], counts[i]});
            spec = ProblemSpec(std::move(classes));
        } else {
            throw ValidationError("plan --strategy cyclic needs --spec or --times/--counts");
        }
        ProblemSpec base_spec(spec->classes());  // the p = n sub-problem
        matrix = build_cyclic(base_spec);
        const long long n = base_spec.num_agents();
        summary = {{"strategy", "cyclic"},
                   {"n", n},
                   {"m", base_spec.num_classes()},
                   {"H", optimum_time(base_spec).to_string()},
                   {"H_decimal", optimum_time(base_spec).to_decimal()},
                   {"au_hours", atomic_unit(base_spec).to_string()},
                   {"halts", n - 1}};
        if (spec->num_objects() > n) {
            ProductionPlan plan = extend_to_p(*spec, matrix_to_scheme(*matrix));
            Rational total = Rational(plan.rounds) * optimum_time(base_spec);
            summary["rounds"] = plan.rounds;
            summary["remainder_objects"] = spec->num_objects() - plan.rounds * n;
            if (plan.remainder_spec) total += optimum_time(*plan.remainder_spec);
            summary["total_time_hours"] = total.to_string();
            summary["total_time_decimal"] = total.to_decimal();
        }
    } else {
        throw ValidationError("unknown strategy '" + opt.strategy + "'");
    }

    if (!opt.matrix_out.empty()) write_file(opt.matrix_out, matrix_to_csv(*matrix));
    if (!opt.type_matrix_out.empty()) {
        TypeMatrix tm = type_matrix(*spec, *matrix);
        write_file(opt.type_matrix_out, binary_matrix_to_csv(tm.to_binary(opt.zero_class)));
        summary["k_uniform"] = tm.k_uniform;
    }

    if (opt.format == "csv")
        emit(opt.out, matrix_to_csv(*matrix));
    else
        emit(opt.out, summary.dump(2) + "\n");
    return 0;
}

int run_verify(const VerifyOptions& opt) {
    if (opt.matrix_path.empty() == opt.scheme_path.empty())
        throw ValidationError("verify needs exactly one of --matrix or --scheme");

    ProblemSpec spec = spec_from_json(json::parse(read_file(opt.spec_path)));
    Scheme scheme;
    std::optional<AssignmentMatrix> matrix;
    if (!opt.matrix_path.empty()) {
        matrix = matrix_from_csv(read_file(opt.matrix_path));
        scheme = matrix_to_scheme(*matrix);
    } else {
        scheme = scheme_from_json(json::parse(read_file(opt.scheme_path)));
    }

    ValidationReport report = validate(spec, scheme);
    json out = validation_to_json(report);
    if (matrix && spec.num_classes() == 2)
        out["k_uniform"] = type_matrix(spec, *matrix).k_uniform;
    emit(opt.out, out.dump(2) + "\n");
    return report.optimal ? 0 : 1;
}

int run_partition(const PartitionOptions& opt) {
    auto times = parse_rational_list(opt.list);
    auto splits = split_search(times, opt.max_elements);
    auto irreducible = irreducible_representation(times, opt.max_elements);
    emit(opt.out, partition_to_json(times, splits, irreducible).dump(2) + "\n");
    return 0;
}

int run_timing(const TimingOptions& opt) {
    Rational T = Rational::from_string(opt.T);
    Rational epsilon = Rational::from_string(opt.epsilon);
    Rational H = optimal_time_two_type(opt.r1, opt.r2, T);
    long long halts = 0;
    if (opt.strategy == "cyclic") {
        halts = opt.r1 + opt.r2 - 1;
    } else if (opt.strategy == "euclid") {
        if (opt.r1 <= opt.r2) throw ValidationError("euclid timing needs r1 > r2");
        halts = halt_number(euclid_trace(opt.r1, opt.r2));
    } else {
        throw ValidationError("unknown strategy '" + opt.strategy + "'");
    }
    TimingReport report = total_time(H, halts, epsilon);
    emit(opt.out, timing_to_json(report, opt.strategy, opt.r1, opt.r2, T).dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-time production schemes: construction, verification, analytics"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    PlanOptions plan_opt;
    auto* plan = app.add_subcommand("plan", "Construct an optimal scheme");
    plan->add_option("--strategy", plan_opt.strategy, "cyclic or euclid")->required();
    plan->add_option("--r1", plan_opt.r1, "majority agent count (euclid)");
    plan->add_option("--r2", plan_opt.r2, "minority agent count (euclid)");
    plan->add_option("--t1", plan_opt.t1, "type 1 completion time (default 1)");
    plan->add_option("--t2", plan_opt.t2, "type 2 completion time (default 2)");
    plan->add_option("--agent-order", plan_opt.agent_order, "type1-first or type2-first");
    plan->add_option("--spec", plan_opt.spec_path, "problem spec JSON file (cyclic)");
    plan->add_option("--times", plan_opt.times, "comma-separated class times (cyclic)");
    plan->add_option("--counts", plan_opt.counts, "comma-separated class counts (cyclic)");
    plan->add_option("--format", plan_opt.format, "stdout payload: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    plan->add_option("--matrix-out", plan_opt.matrix_out, "write matrix CSV here");
    plan->add_option("--type-matrix-out", plan_opt.type_matrix_out,
                     "write 0/1 class projection CSV here (m = 2)");
    plan->add_option("--zero-class", plan_opt.zero_class, "class rendered as 0 (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    plan->add_option("--out", plan_opt.out, "write stdout payload to a file instead");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Validate a scheme against a spec");
    verify->add_option("--spec", verify_opt.spec_path, "problem spec JSON file")->required();
    verify->add_option("--matrix", verify_opt.matrix_path, "assignment matrix CSV file");
    verify->add_option("--scheme", verify_opt.scheme_path, "scheme JSON file");
    verify->add_option("--out", verify_opt.out, "write the report to a file");

    PartitionOptions partition_opt;
    auto* partition = app.add_subcommand("partition", "Harmonic-mean split search");
    partition->add_option("--list", partition_opt.list, "comma-separated rationals")
        ->required();
    partition->add_option("--max-elements", partition_opt.max_elements,
                          "enumeration bound (default 24)");
    partition->add_option("--out", partition_opt.out, "write the report to a file");

    TimingOptions timing_opt;
    auto* timing = app.add_subcommand("timing", "Wall-clock time with handover overhead");
    timing->add_option("--r1", timing_opt.r1, "count of unit-speed agents")->required();
    timing->add_option("--r2", timing_opt.r2, "count of speed-T agents")->required();
    timing->add_option("--T", timing_opt.T, "completion time of the second class");
    timing->add_option("--epsilon", timing_opt.epsilon, "hours lost per halt");
    timing->add_option("--strategy", timing_opt.strategy, "cyclic or euclid");
    timing->add_option("--out", timing_opt.out, "write the report to a file");

    long long fib_p = 0;
    std::string fib_out;
    auto* fib = app.add_subcommand("fib", "Fibonacci-pair halt analytics");
    fib->add_option("--p", fib_p, "Fibonacci index (p >= 2)")->required();
    fib->add_option("--out", fib_out, "write the report to a file");

    long long stats_n = 0;
    std::string stats_out;
    auto* stats = app.add_subcommand("halt-stats", "Halt numbers over all coprime pairs");
    stats->add_option("--n", stats_n, "total agent count (n >= 3)")->required();
    stats->add_option("--out", stats_out, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (plan->parsed()) return run_plan(plan_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (partition->parsed()) return run_partition(partition_opt);
        if (timing->parsed()) return run_timing(timing_opt);
        if (fib->parsed()) {
            emit(fib_out, fibonacci_to_json(fibonacci_analysis(fib_p)).dump(2) + "\n");
            return 0;
        }
        if (stats->parsed()) {
            emit(stats_out, halt_statistics_to_json(halt_statistics(stats_n)).dump(2) + "\n");
            return 0;
        }
    } catch (const SchemeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
