#include "ctq/simulator.hpp"

#include "ctq/error.hpp"

#include <deque>
#include <functional>

namespace ctq {

namespace {

void require_nonempty(const TaskSet& tasks)
{
    if (tasks.empty())
        throw ValidationError("task set is empty");
}

void require_quantum(Tu tq)
{
    if (tq < 1)
        throw ValidationError("time quantum must be >= 1, got " + std::to_string(tq));
}

// Cyclic FIFO queue; `allowance(pos)` is the most a dispatch of the task at
// queue position `pos` may run.
Schedule run_cyclic(const TaskSet& tasks, const std::function<Tu(std::size_t)>& allowance)
{
    std::vector<Tu> remaining = tasks.bursts();
    std::vector<std::int64_t> dispatches(tasks.size(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t pos = 0; pos < tasks.size(); ++pos)
        queue.push_back(pos);

    Schedule schedule;
    Tu clock = 0;
    while (!queue.empty()) {
        const std::size_t pos = queue.front();
        queue.pop_front();
        const Tu run = std::min(allowance(pos), remaining[pos]);
        schedule.slices.push_back(Slice{tasks[pos].id, clock, clock + run, ++dispatches[pos]});
        clock += run;
        remaining[pos] -= run;
        if (remaining[pos] > 0)
            queue.push_back(pos);
    }
    return schedule;
}

} // namespace

Schedule simulate_fixed_rr(const TaskSet& tasks, Tu tq)
{
    require_nonempty(tasks);
    require_quantum(tq);
    return run_cyclic(tasks, [tq](std::size_t) { return tq; });
}

Schedule simulate_fcfs(const TaskSet& tasks)
{
    require_nonempty(tasks);
    Schedule schedule;
    Tu clock = 0;
    for (const Task& t : tasks) {
        schedule.slices.push_back(Slice{t.id, clock, clock + t.burst, 1});
        clock += t.burst;
    }
    return schedule;
}

Tu wrr_slice(Tu tq, std::int64_t weight, std::int64_t reference_weight)
{
    require_quantum(tq);
    if (reference_weight < 1)
        throw ValidationError("WRR reference weight must be >= 1");
    return std::max<Tu>(1, tq * weight / reference_weight);
}

Schedule simulate_wrr(const TaskSet& tasks, Tu tq, std::int64_t reference_weight)
{
    require_nonempty(tasks);
    std::vector<Tu> per_task(tasks.size());
    for (std::size_t pos = 0; pos < tasks.size(); ++pos)
        per_task[pos] = wrr_slice(tq, tasks[pos].weight, reference_weight);
    return run_cyclic(tasks, [&per_task](std::size_t pos) { return per_task[pos]; });
}

Schedule simulate(const TaskSet& tasks, const SimConfig& config)
{
    switch (config.algorithm) {
    case Algorithm::FixedRR:
        return simulate_fixed_rr(tasks, config.tq);
    case Algorithm::Fcfs:
        return simulate_fcfs(tasks);
    case Algorithm::Wrr:
        return simulate_wrr(tasks, config.tq, config.wrr_reference_weight);
    }
    throw InvariantError("unknown algorithm");
}

} // namespace ctq
