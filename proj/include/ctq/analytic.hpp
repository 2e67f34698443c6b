#pragma once

#include "ctq/model.hpp"

#include <span>
#include <vector>

namespace ctq {

/// Closed-form waiting times of fixed-quantum round-robin with all tasks
/// arriving at 0. Burst sequences are in FIFO queue order.

/// Full quanta a task uses before its final slice: floor(burst / tq), or
/// burst / tq - 1 when tq divides burst exactly.
std::int64_t ntq(Tu burst, Tu tq);

/// Start time of the final slice of the task at queue position `pos`
/// (0-based) under fixed-quantum round-robin.
Tu sltq(std::span<const Tu> bursts, Tu tq, std::size_t pos);

struct AnalyticEntry {
    TaskId task_id = 0;
    std::int64_t ntq = 0;
    Tu sltq = 0;
    Tu waiting = 0;
};

struct AnalyticProfile {
    Tu tq = 0;
    std::vector<AnalyticEntry> per_task;
    Tu total_waiting = 0;
    Rational avg_waiting;
};

AnalyticProfile waiting_profile(const TaskSet& tasks, Tu tq);

/// Sum of per-task waiting for one quantum; the hot path of the quantum scan.
Tu total_waiting(std::span<const Tu> bursts, Tu tq);

struct QuantumChoice {
    Tu tq = 0;
    Tu total_waiting = 0;
    Rational avg_waiting;
    std::int64_t candidates_evaluated = 0;
    std::int64_t tied_candidates = 0; // other quanta reaching the same minimum
};

/// Scans every integer quantum in [1, largest burst] and keeps the one with
/// the smallest total waiting, preferring the largest quantum on ties.
/// best_tq dispatches to the OpenMP scan for large inputs; the serial scan
/// is the reference it must agree with.
QuantumChoice best_tq(std::span<const Tu> bursts);
QuantumChoice best_tq_serial(std::span<const Tu> bursts);
QuantumChoice best_tq_parallel(std::span<const Tu> bursts);

inline QuantumChoice best_tq(const TaskSet& tasks)
{
    const auto b = tasks.bursts();
    return best_tq(b);
}

} // namespace ctq
