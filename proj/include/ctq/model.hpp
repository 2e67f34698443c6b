#pragma once

#include "ctq/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ctq {

/// Durations and instants, in integer time units. Every task arrives at 0.
using Tu = std::int64_t;
using TaskId = std::uint32_t;

struct Task {
    TaskId id = 0;
    Tu burst = 1;
    std::int64_t weight = 1; // consulted by weighted round-robin only
    std::string label;       // display name; empty means "T<id>"

    std::string display_name() const;

    friend bool operator==(const Task&, const Task&) = default;
};

/// FIFO run queue. Order is significant: the analytic start-of-last-slice
/// formula distinguishes tasks ahead of and behind a given task.
class TaskSet {
public:
    TaskSet() = default;
    explicit TaskSet(std::vector<Task> tasks);

    /// Ids 1..n in the given order, weight 1.
    static TaskSet from_bursts(std::span<const Tu> bursts);
    static TaskSet from_bursts(std::initializer_list<Tu> bursts);

    std::size_t size() const { return tasks_.size(); }
    bool empty() const { return tasks_.empty(); }

    const Task& operator[](std::size_t pos) const { return tasks_[pos]; }
    const std::vector<Task>& tasks() const { return tasks_; }
    auto begin() const { return tasks_.begin(); }
    auto end() const { return tasks_.end(); }

    /// Queue position of `id`; throws InvariantError if absent.
    std::size_t position_of(TaskId id) const;
    bool contains(TaskId id) const { return index_.contains(id); }

    std::vector<Tu> bursts() const;
    Tu total_burst() const;
    Tu largest_burst() const;

    friend bool operator==(const TaskSet& a, const TaskSet& b) { return a.tasks_ == b.tasks_; }

private:
    std::vector<Task> tasks_;
    std::unordered_map<TaskId, std::size_t> index_;
};

struct Slice {
    TaskId task_id = 0;
    Tu start = 0;
    Tu end = 0;
    std::int64_t round = 1;

    Tu length() const { return end - start; }

    friend bool operator==(const Slice&, const Slice&) = default;
};

/// A Gantt chart: gapless, starting at 0, context switches cost nothing.
struct Schedule {
    std::vector<Slice> slices;

    Tu makespan() const { return slices.empty() ? 0 : slices.back().end; }

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct TaskMetrics {
    TaskId task_id = 0;
    Tu burst = 0;
    Tu completion = 0;
    Tu turnaround = 0;
    Tu waiting = 0;
    std::int64_t context_switches = 0;
    std::int64_t slice_count = 0;
    Tu last_slice_start = 0;

    friend bool operator==(const TaskMetrics&, const TaskMetrics&) = default;
};

struct MetricsReport {
    std::vector<TaskMetrics> per_task; // queue order
    Tu total_waiting = 0;
    Rational avg_waiting;
    Rational avg_turnaround;
    std::int64_t total_context_switches = 0;
    Tu makespan = 0;

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Throws InvariantError unless `schedule` is a gapless timeline from 0 that
/// gives every task in `tasks` exactly its burst and mentions nobody else.
void validate_schedule(const Schedule& schedule, const TaskSet& tasks);

/// Per-task and aggregate metrics of a validated schedule.
///
/// Context switches: a slice of T is charged one switch when T still has
/// work left after it and the next slice on the timeline belongs to another
/// task. Final slices and back-to-back slices of one task are free.
MetricsReport metrics_from_schedule(const Schedule& schedule, const TaskSet& tasks);

} // namespace ctq
