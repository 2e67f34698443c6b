#pragma once

#include "ctq/engine.hpp"
#include "ctq/model.hpp"
#include "ctq/workload.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ctq {

/// Everything measured on one workload: fixed RR at the best initial
/// quantum, CTQ with an optimized first quantum, and FCFS.
struct WorkloadOutcome {
    TaskSet tasks;
    Tu rr_tq = 0;
    Schedule rr_schedule;
    MetricsReport rr;
    CtqTrace ctq;
    Schedule fcfs_schedule;
    MetricsReport fcfs;
};

WorkloadOutcome compare_workload(const TaskSet& tasks);

struct ExperimentRow {
    std::int64_t workload_id = 0;
    std::int64_t n = 0;
    std::string algorithm;   // rr, ctq, fcfs
    std::string tq_policy;   // fixed quantum, "optimized", or "none"
    Rational avg_wt;
    Rational avg_tat;
    std::int64_t context_switches = 0;
    Tu makespan = 0;
    std::optional<std::int64_t> rounds; // ctq only
    std::vector<Tu> tq_sequence;        // ctq only

    friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

/// Per-algorithm means over every workload of a sweep.
struct SummaryRow {
    std::string algorithm;
    Rational n;
    Rational avg_wt;
    Rational avg_tat;
    Rational context_switches;
    Rational makespan;
    std::optional<Rational> rounds;

    friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

struct CompareResult {
    std::vector<ExperimentRow> rows; // workload index, then rr, ctq, fcfs
    std::vector<SummaryRow> summary; // rr, ctq, fcfs
};

std::vector<ExperimentRow> rows_for(std::int64_t workload_id, const WorkloadOutcome& outcome);

/// Generates `runs` workloads from `spec` and evaluates them. The OpenMP
/// sweep evaluates workloads concurrently but buffers rows by index, so its
/// result equals the serial sweep exactly.
CompareResult run_compare(const WorkloadSpec& spec, std::int64_t runs);
CompareResult run_compare_serial(const WorkloadSpec& spec, std::int64_t runs);

std::vector<WorkloadOutcome> evaluate_all(const std::vector<TaskSet>& workloads);
std::vector<WorkloadOutcome> evaluate_all_serial(const std::vector<TaskSet>& workloads);

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows);

inline constexpr const char* kCompareCsvHeader =
    "workload_id,n,algorithm,tq_policy,avg_wt,avg_tat,context_switches,makespan,rounds,tq_sequence";

std::string render_csv(const CompareResult& result);
std::string render_json(const CompareResult& result);

// Single-run reports for `simulate`.

std::string render_slices_csv(const Schedule& schedule);
std::string render_metrics(const MetricsReport& report);
/// Paper-style Gantt chart: a row of task labels over a row of boundaries.
std::string render_gantt_chart(const Schedule& schedule, const TaskSet& tasks);
std::string render_run_json(const std::string& algorithm, const Schedule& schedule,
                            const MetricsReport& report, const std::vector<Tu>& tq_sequence);

} // namespace ctq
