// ctqsim: command-line front end for the round-robin / CTQ toolkit.
#include "ctq/analytic.hpp"
#include "ctq/engine.hpp"
#include "ctq/error.hpp"
#include "ctq/experiment.hpp"
#include "ctq/simulator.hpp"
#include "ctq/workload.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ctq::ValidationError("cannot write '" + out_path + "'");
    out << text;
}

struct SimulateArgs {
    std::string tasks;
    std::string algo = "rr";
    std::optional<ctq::Tu> tq;
    std::optional<ctq::Tu> first_tq;
    std::int64_t ref_weight = 10;
    bool gantt = false;
    std::string format = "csv";
    std::string out;
};

void cmd_simulate(const SimulateArgs& a)
{
    const ctq::TaskSet tasks = ctq::load_tasks_file(a.tasks);
    if (tasks.empty())
        throw ctq::ValidationError("task file '" + a.tasks + "' has no tasks");

    ctq::Schedule schedule;
    std::vector<ctq::Tu> tq_sequence;
    if (a.algo == "ctq") {
        auto trace = ctq::run_ctq(tasks, a.first_tq);
        schedule = std::move(trace.schedule);
        tq_sequence = std::move(trace.tq_sequence);
    } else if (a.algo == "fcfs") {
        schedule = ctq::simulate_fcfs(tasks);
    } else {
        if (!a.tq)
            throw UsageError("--algo " + a.algo + " requires --tq");
        schedule = a.algo == "rr" ? ctq::simulate_fixed_rr(tasks, *a.tq)
                                  : ctq::simulate_wrr(tasks, *a.tq, a.ref_weight);
    }
    const ctq::MetricsReport report = ctq::metrics_from_schedule(schedule, tasks);

    std::string text;
    if (a.format == "json") {
        text = ctq::render_run_json(a.algo, schedule, report, tq_sequence);
    } else {
        if (a.gantt)
            text += ctq::render_gantt_chart(schedule, tasks) + "\n";
        text += ctq::render_slices_csv(schedule) + "\n" + ctq::render_metrics(report);
        if (!tq_sequence.empty()) {
            text += "tq_sequence=";
            for (std::size_t k = 0; k < tq_sequence.size(); ++k)
                text += (k ? "|" : "") + std::to_string(tq_sequence[k]);
            text += "\n";
        }
    }
    emit(text, a.out);
}

void cmd_best_tq(const std::string& path, const std::string& out)
{
    const ctq::TaskSet tasks = ctq::load_tasks_file(path);
    const ctq::QuantumChoice c = ctq::best_tq(tasks);
    emit("tq=" + std::to_string(c.tq) + "\navg_wt=" + c.avg_waiting.to_string() +
             "\ntotal_waiting=" + std::to_string(c.total_waiting) +
             "\ncandidates=" + std::to_string(c.candidates_evaluated) +
             "\nties=" + std::to_string(c.tied_candidates) + "\n",
         out);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Round-robin waiting-time analysis and changeable-time-quantum scheduling"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run one scheduler and print its Gantt chart and metrics");
    simulate->add_option("--tasks", sim.tasks, "Task file (id,burst[,weight] per line)")->required();
    simulate->add_option("--algo", sim.algo, "Scheduler")->check(CLI::IsMember({"rr", "ctq", "fcfs", "wrr"}));
    simulate->add_option("--tq", sim.tq, "Fixed quantum for rr and wrr")->check(CLI::PositiveNumber);
    simulate->add_option("--first-tq", sim.first_tq, "First-round quantum for ctq (default: optimized)")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--ref-weight", sim.ref_weight, "WRR weight that earns a full quantum")
        ->check(CLI::PositiveNumber);
    simulate->add_flag("--gantt", sim.gantt, "Also draw a text Gantt chart");
    simulate->add_option("--format", sim.format)->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--out", sim.out, "Write to FILE instead of stdout");

    std::string best_tasks;
    std::string best_out;
    auto* best = app.add_subcommand("best-tq", "Quantum minimizing fixed-RR average waiting time");
    best->add_option("--tasks", best_tasks)->required();
    best->add_option("--out", best_out);

    ctq::WorkloadSpec spec{.n = 5, .burst_min = 1, .burst_max = 500, .seed = 1};
    std::int64_t runs = 1;
    std::string cmp_format = "csv";
    std::string cmp_out;
    auto* compare = app.add_subcommand("compare", "Fixed RR vs CTQ vs FCFS over seeded random workloads");
    compare->add_option("--n", spec.n)->check(CLI::PositiveNumber);
    compare->add_option("--burst-min", spec.burst_min)->check(CLI::PositiveNumber);
    compare->add_option("--burst-max", spec.burst_max)->check(CLI::PositiveNumber);
    compare->add_option("--seed", spec.seed);
    compare->add_option("--runs", runs)->check(CLI::PositiveNumber);
    compare->add_option("--format", cmp_format)->check(CLI::IsMember({"csv", "json"}));
    compare->add_option("--out", cmp_out);

    ctq::WorkloadSpec gen_spec{.n = 5, .burst_min = 1, .burst_max = 500, .seed = 1};
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "Write a seeded random task file");
    generate->add_option("--n", gen_spec.n)->check(CLI::PositiveNumber);
    generate->add_option("--burst-min", gen_spec.burst_min)->check(CLI::PositiveNumber);
    generate->add_option("--burst-max", gen_spec.burst_max)->check(CLI::PositiveNumber);
    generate->add_option("--seed", gen_spec.seed);
    generate->add_option("--out", gen_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*simulate) {
            cmd_simulate(sim);
        } else if (*best) {
            cmd_best_tq(best_tasks, best_out);
        } else if (*compare) {
            const auto result = ctq::run_compare(spec, runs);
            emit(cmp_format == "json" ? ctq::render_json(result) : ctq::render_csv(result), cmp_out);
        } else if (*generate) {
            emit(ctq::save_tasks(ctq::generate(gen_spec)), gen_out);
        }
    } catch (const UsageError& e) {
        std::cerr << "ctqsim: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ctq::ValidationError& e) {
        std::cerr << "ctqsim: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "ctqsim: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
