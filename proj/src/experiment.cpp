#include "ctq/experiment.hpp"

#include "ctq/analytic.hpp"
#include "ctq/error.hpp"
#include "ctq/simulator.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace ctq {

namespace {

std::string join(const std::vector<Tu>& values, char sep)
{
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0)
            out += sep;
        out += std::to_string(values[k]);
    }
    return out;
}

CompareResult assemble(const std::vector<WorkloadOutcome>& outcomes)
{
    CompareResult result;
    for (std::size_t w = 0; w < outcomes.size(); ++w) {
        auto rows = rows_for(static_cast<std::int64_t>(w), outcomes[w]);
        result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    }
    result.summary = summarize(result.rows);
    return result;
}

} // namespace

WorkloadOutcome compare_workload(const TaskSet& tasks)
{
    WorkloadOutcome out;
    out.tasks = tasks;
    out.rr_tq = best_tq(tasks).tq;
    out.rr_schedule = simulate_fixed_rr(tasks, out.rr_tq);
    out.rr = metrics_from_schedule(out.rr_schedule, tasks);
    out.ctq = run_ctq(tasks);
    out.fcfs_schedule = simulate_fcfs(tasks);
    out.fcfs = metrics_from_schedule(out.fcfs_schedule, tasks);
    return out;
}

std::vector<ExperimentRow> rows_for(std::int64_t workload_id, const WorkloadOutcome& outcome)
{
    const auto n = static_cast<std::int64_t>(outcome.tasks.size());
    auto row = [&](std::string algorithm, std::string policy, const MetricsReport& m) {
        ExperimentRow r;
        r.workload_id = workload_id;
        r.n = n;
        r.algorithm = std::move(algorithm);
        r.tq_policy = std::move(policy);
        r.avg_wt = m.avg_waiting;
        r.avg_tat = m.avg_turnaround;
        r.context_switches = m.total_context_switches;
        r.makespan = m.makespan;
        return r;
    };

    std::vector<ExperimentRow> rows;
    rows.push_back(row("rr", std::to_string(outcome.rr_tq), outcome.rr));
    ExperimentRow ctq = row("ctq", "optimized", outcome.ctq.metrics);
    ctq.rounds = static_cast<std::int64_t>(outcome.ctq.rounds.size());
    ctq.tq_sequence = outcome.ctq.tq_sequence;
    rows.push_back(std::move(ctq));
    rows.push_back(row("fcfs", "none", outcome.fcfs));
    return rows;
}

std::vector<WorkloadOutcome> evaluate_all_serial(const std::vector<TaskSet>& workloads)
{
    std::vector<WorkloadOutcome> out;
    out.reserve(workloads.size());
    for (const TaskSet& tasks : workloads)
        out.push_back(compare_workload(tasks));
    return out;
}

std::vector<WorkloadOutcome> evaluate_all(const std::vector<TaskSet>& workloads)
{
    std::vector<WorkloadOutcome> out(workloads.size());
    const auto count = static_cast<std::int64_t>(workloads.size());
    // Exceptions may not cross the parallel region; keep the first by index.
    std::vector<std::exception_ptr> errors(workloads.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t w = 0; w < count; ++w) {
        const auto idx = static_cast<std::size_t>(w);
        try {
            out[idx] = compare_workload(workloads[idx]);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }

    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

CompareResult run_compare(const WorkloadSpec& spec, std::int64_t runs)
{
    return assemble(evaluate_all(generate_batch(spec, runs)));
}

CompareResult run_compare_serial(const WorkloadSpec& spec, std::int64_t runs)
{
    return assemble(evaluate_all_serial(generate_batch(spec, runs)));
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows)
{
    std::vector<SummaryRow> out;
    for (const char* algorithm : {"rr", "ctq", "fcfs"}) {
        SummaryRow s;
        s.algorithm = algorithm;
        std::int64_t count = 0;
        Rational rounds;
        bool has_rounds = false;
        for (const ExperimentRow& r : rows) {
            if (r.algorithm != algorithm)
                continue;
            ++count;
            s.n = s.n + r.n;
            s.avg_wt = s.avg_wt + r.avg_wt;
            s.avg_tat = s.avg_tat + r.avg_tat;
            s.context_switches = s.context_switches + r.context_switches;
            s.makespan = s.makespan + r.makespan;
            if (r.rounds) {
                rounds = rounds + *r.rounds;
                has_rounds = true;
            }
        }
        if (count == 0)
            continue;
        const Rational c(count);
        s.n = s.n / c;
        s.avg_wt = s.avg_wt / c;
        s.avg_tat = s.avg_tat / c;
        s.context_switches = s.context_switches / c;
        s.makespan = s.makespan / c;
        if (has_rounds)
            s.rounds = rounds / c;
        out.push_back(std::move(s));
    }
    return out;
}

std::string render_csv(const CompareResult& result)
{
    std::ostringstream os;
    os << kCompareCsvHeader << '\n';
    for (const ExperimentRow& r : result.rows) {
        os << r.workload_id << ',' << r.n << ',' << r.algorithm << ',' << r.tq_policy << ','
           << r.avg_wt.to_string() << ',' << r.avg_tat.to_string() << ',' << r.context_switches
           << ',' << r.makespan << ',' << (r.rounds ? std::to_string(*r.rounds) : "") << ','
           << join(r.tq_sequence, '|') << '\n';
    }
    for (const SummaryRow& s : result.summary) {
        const std::string policy = s.algorithm == "rr" ? "best-initial"
                                   : s.algorithm == "ctq" ? "optimized"
                                                          : "none";
        os << "mean," << s.n.to_string() << ',' << s.algorithm << ',' << policy << ','
           << s.avg_wt.to_string() << ',' << s.avg_tat.to_string() << ','
           << s.context_switches.to_string() << ',' << s.makespan.to_string() << ','
           << (s.rounds ? s.rounds->to_string() : "") << ",\n";
    }
    return os.str();
}

std::string render_json(const CompareResult& result)
{
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const ExperimentRow& r : result.rows) {
        nlohmann::ordered_json row;
        row["workload_id"] = r.workload_id;
        row["n"] = r.n;
        row["algorithm"] = r.algorithm;
        row["tq_policy"] = r.tq_policy;
        row["avg_wt"] = r.avg_wt.to_string();
        row["avg_tat"] = r.avg_tat.to_string();
        row["context_switches"] = r.context_switches;
        row["makespan"] = r.makespan;
        row["rounds"] = r.rounds ? nlohmann::ordered_json(*r.rounds) : nlohmann::ordered_json();
        row["tq_sequence"] = r.tq_sequence;
        doc["rows"].push_back(std::move(row));
    }
    doc["summary"] = nlohmann::ordered_json::array();
    for (const SummaryRow& s : result.summary) {
        nlohmann::ordered_json row;
        row["algorithm"] = s.algorithm;
        row["n"] = s.n.to_string();
        row["avg_wt"] = s.avg_wt.to_string();
        row["avg_tat"] = s.avg_tat.to_string();
        row["context_switches"] = s.context_switches.to_string();
        row["makespan"] = s.makespan.to_string();
        row["rounds"] = s.rounds ? nlohmann::ordered_json(s.rounds->to_string())
                                 : nlohmann::ordered_json();
        doc["summary"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string render_slices_csv(const Schedule& schedule)
{
    std::ostringstream os;
    os << "task_id,start,end,round\n";
    for (const Slice& s : schedule.slices)
        os << s.task_id << ',' << s.start << ',' << s.end << ',' << s.round << '\n';
    return os.str();
}

std::string render_metrics(const MetricsReport& report)
{
    std::ostringstream os;
    os << "task_id,burst,completion,turnaround,waiting,context_switches,slices\n";
    for (const TaskMetrics& m : report.per_task)
        os << m.task_id << ',' << m.burst << ',' << m.completion << ',' << m.turnaround << ','
           << m.waiting << ',' << m.context_switches << ',' << m.slice_count << '\n';
    os << "total_waiting=" << report.total_waiting << '\n'
       << "avg_wt=" << report.avg_waiting.to_string() << '\n'
       << "avg_tat=" << report.avg_turnaround.to_string() << '\n'
       << "context_switches=" << report.total_context_switches << '\n'
       << "makespan=" << report.makespan << '\n';
    return os.str();
}

std::string render_gantt_chart(const Schedule& schedule, const TaskSet& tasks)
{
    std::string labels;
    std::string marks;
    for (const Slice& s : schedule.slices) {
        const std::string name = tasks[tasks.position_of(s.task_id)].display_name();
        const std::string start = std::to_string(s.start);
        const std::size_t width = std::max(name.size(), start.size()) + 2;
        labels += "| " + name + std::string(width - name.size() - 1, ' ');
        marks += start + std::string(width + 1 - start.size(), ' ');
    }
    labels += "|";
    marks += std::to_string(schedule.makespan());
    return labels + "\n" + marks + "\n";
}

std::string render_run_json(const std::string& algorithm, const Schedule& schedule,
                            const MetricsReport& report, const std::vector<Tu>& tq_sequence)
{
    nlohmann::ordered_json doc;
    doc["algorithm"] = algorithm;
    doc["slices"] = nlohmann::ordered_json::array();
    for (const Slice& s : schedule.slices)
        doc["slices"].push_back(
            {{"task_id", s.task_id}, {"start", s.start}, {"end", s.end}, {"round", s.round}});
    doc["per_task"] = nlohmann::ordered_json::array();
    for (const TaskMetrics& m : report.per_task)
        doc["per_task"].push_back({{"task_id", m.task_id},
                                   {"burst", m.burst},
                                   {"completion", m.completion},
                                   {"turnaround", m.turnaround},
                                   {"waiting", m.waiting},
                                   {"context_switches", m.context_switches},
                                   {"slices", m.slice_count}});
    doc["total_waiting"] = report.total_waiting;
    doc["avg_wt"] = report.avg_waiting.to_string();
    doc["avg_tat"] = report.avg_turnaround.to_string();
    doc["context_switches"] = report.total_context_switches;
    doc["makespan"] = report.makespan;
    if (!tq_sequence.empty())
        doc["tq_sequence"] = tq_sequence;
    return doc.dump(2) + "\n";
}

} // namespace ctq
