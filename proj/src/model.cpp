#include "ctq/model.hpp"

#include "ctq/error.hpp"

#include <algorithm>
#include <numeric>

namespace ctq {

std::string Task::display_name() const
{
    return label.empty() ? "T" + std::to_string(id) : label;
}

TaskSet::TaskSet(std::vector<Task> tasks) : tasks_(std::move(tasks))
{
    index_.reserve(tasks_.size());
    for (std::size_t pos = 0; pos < tasks_.size(); ++pos) {
        const Task& t = tasks_[pos];
        if (t.burst < 1)
            throw ValidationError("task " + std::to_string(t.id) + ": burst must be >= 1");
        if (t.weight < 1)
            throw ValidationError("task " + std::to_string(t.id) + ": weight must be >= 1");
        if (!index_.emplace(t.id, pos).second)
            throw ValidationError("duplicate task id " + std::to_string(t.id));
    }
}

TaskSet TaskSet::from_bursts(std::span<const Tu> bursts)
{
    std::vector<Task> tasks;
    tasks.reserve(bursts.size());
    TaskId id = 1;
    for (Tu b : bursts)
        tasks.push_back(Task{.id = id++, .burst = b});
    return TaskSet(std::move(tasks));
}

TaskSet TaskSet::from_bursts(std::initializer_list<Tu> bursts)
{
    return from_bursts(std::span<const Tu>(bursts.begin(), bursts.size()));
}

std::size_t TaskSet::position_of(TaskId id) const
{
    const auto it = index_.find(id);
    if (it == index_.end())
        throw InvariantError("unknown task id " + std::to_string(id));
    return it->second;
}

std::vector<Tu> TaskSet::bursts() const
{
    std::vector<Tu> out;
    out.reserve(tasks_.size());
    for (const Task& t : tasks_)
        out.push_back(t.burst);
    return out;
}

Tu TaskSet::total_burst() const
{
    return std::accumulate(tasks_.begin(), tasks_.end(), Tu{0},
                           [](Tu acc, const Task& t) { return acc + t.burst; });
}

Tu TaskSet::largest_burst() const
{
    Tu lbt = 0;
    for (const Task& t : tasks_)
        lbt = std::max(lbt, t.burst);
    return lbt;
}

void validate_schedule(const Schedule& schedule, const TaskSet& tasks)
{
    if (tasks.empty())
        throw InvariantError("schedule validated against an empty task set");

    std::vector<Tu> served(tasks.size(), 0);
    Tu clock = 0;
    for (const Slice& s : schedule.slices) {
        if (s.start != clock)
            throw InvariantError("schedule is not contiguous at t=" + std::to_string(clock));
        if (s.end <= s.start)
            throw InvariantError("empty or reversed slice at t=" + std::to_string(s.start));
        if (s.round < 1)
            throw InvariantError("slice round must be >= 1");
        served[tasks.position_of(s.task_id)] += s.length();
        clock = s.end;
    }
    for (std::size_t pos = 0; pos < tasks.size(); ++pos) {
        if (served[pos] != tasks[pos].burst)
            throw InvariantError("task " + std::to_string(tasks[pos].id) + " served " +
                                 std::to_string(served[pos]) + " of burst " +
                                 std::to_string(tasks[pos].burst));
    }
}

MetricsReport metrics_from_schedule(const Schedule& schedule, const TaskSet& tasks)
{
    validate_schedule(schedule, tasks);

    MetricsReport report;
    report.per_task.resize(tasks.size());
    std::vector<Tu> remaining(tasks.size());
    for (std::size_t pos = 0; pos < tasks.size(); ++pos) {
        report.per_task[pos].task_id = tasks[pos].id;
        report.per_task[pos].burst = tasks[pos].burst;
        remaining[pos] = tasks[pos].burst;
    }

    const auto& slices = schedule.slices;
    for (std::size_t k = 0; k < slices.size(); ++k) {
        const std::size_t pos = tasks.position_of(slices[k].task_id);
        TaskMetrics& m = report.per_task[pos];
        remaining[pos] -= slices[k].length();
        ++m.slice_count;
        m.last_slice_start = slices[k].start;
        if (remaining[pos] == 0)
            m.completion = slices[k].end;
        else if (k + 1 < slices.size() && slices[k + 1].task_id != slices[k].task_id)
            ++m.context_switches;
    }

    Tu total_turnaround = 0;
    for (TaskMetrics& m : report.per_task) {
        m.turnaround = m.completion;
        m.waiting = m.turnaround - m.burst;
        report.total_waiting += m.waiting;
        report.total_context_switches += m.context_switches;
        total_turnaround += m.turnaround;
    }
    const auto n = static_cast<std::int64_t>(tasks.size());
    report.avg_waiting = Rational(report.total_waiting, n);
    report.avg_turnaround = Rational(total_turnaround, n);
    report.makespan = schedule.makespan();
    return report;
}

} // namespace ctq
