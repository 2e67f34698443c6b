#include "ctq/engine.hpp"

#include "ctq/error.hpp"

#include <algorithm>
#include <numeric>

namespace ctq {

namespace {

using Scanner = QuantumChoice (*)(std::span<const Tu>);

CtqTrace run(const TaskSet& tasks, std::optional<Tu> first_tq, Scanner scan)
{
    if (tasks.empty())
        throw ValidationError("task set is empty");
    if (first_tq && *first_tq < 1)
        throw ValidationError("first time quantum must be >= 1");

    std::vector<Residual> survivors;
    survivors.reserve(tasks.size());
    for (const Task& t : tasks)
        survivors.push_back({t.id, t.burst});

    CtqTrace trace;
    Tu clock = 0;
    std::int64_t q = 1;
    while (!survivors.empty()) {
        RoundRecord record;
        record.q = q;
        record.survivors_before = survivors;
        if (q == 1 && first_tq) {
            record.tq_used = *first_tq;
            record.chosen_by = QuantumSource::UserSupplied;
        } else {
            std::vector<Tu> residuals;
            residuals.reserve(survivors.size());
            for (const Residual& r : survivors)
                residuals.push_back(r.residual);
            const QuantumChoice choice = scan(residuals);
            record.tq_used = choice.tq;
            record.chosen_by = QuantumSource::Optimized;
            record.candidates_evaluated = choice.candidates_evaluated;
            record.tied_candidates = choice.tied_candidates;
        }

        RoundOutcome outcome = run_round(survivors, record.tq_used, clock, q);
        for (const Residual& r : survivors) {
            const bool alive = std::any_of(outcome.survivors.begin(), outcome.survivors.end(),
                                           [&](const Residual& s) { return s.task_id == r.task_id; });
            if (!alive)
                record.completed_this_round.push_back(r.task_id);
        }
        trace.schedule.slices.insert(trace.schedule.slices.end(), outcome.slices.begin(),
                                     outcome.slices.end());
        trace.tq_sequence.push_back(record.tq_used);
        trace.rounds.push_back(std::move(record));
        survivors = std::move(outcome.survivors);
        clock = outcome.clock;
        ++q;
    }

    trace.metrics = metrics_from_schedule(trace.schedule, tasks);
    return trace;
}

} // namespace

std::vector<Residual> residual_times(const TaskSet& tasks, std::span<const Tu> tq_history)
{
    const Tu used = std::accumulate(tq_history.begin(), tq_history.end(), Tu{0});
    std::vector<Residual> out;
    for (const Task& t : tasks)
        if (t.burst > used)
            out.push_back({t.id, t.burst - used});
    return out;
}

RoundOutcome run_round(std::span<const Residual> survivors, Tu tq, Tu clock, std::int64_t q)
{
    if (tq < 1)
        throw ValidationError("time quantum must be >= 1");
    RoundOutcome out;
    out.slices.reserve(survivors.size());
    for (const Residual& r : survivors) {
        const Tu run = std::min(tq, r.residual);
        out.slices.push_back(Slice{r.task_id, clock, clock + run, q});
        clock += run;
        if (r.residual > run)
            out.survivors.push_back({r.task_id, r.residual - run});
    }
    out.clock = clock;
    return out;
}

CtqTrace run_ctq(const TaskSet& tasks, std::optional<Tu> first_tq)
{
    return run(tasks, first_tq, [](std::span<const Tu> b) { return best_tq(b); });
}

CtqTrace run_ctq_serial(const TaskSet& tasks, std::optional<Tu> first_tq)
{
    return run(tasks, first_tq, &best_tq_serial);
}

} // namespace ctq
