#pragma once

#include "ctq/model.hpp"

namespace ctq {

enum class Algorithm { FixedRR, Fcfs, Wrr };

struct SimConfig {
    Algorithm algorithm = Algorithm::FixedRR;
    Tu tq = 0; // required by FixedRR and Wrr
    std::int64_t wrr_reference_weight = 10;
};

/// Slice-by-slice executors. Each one walks a cyclic FIFO queue and emits
/// the full Gantt chart; slice.round counts how many times the dispatched
/// task has run, this slice included.

Schedule simulate_fixed_rr(const TaskSet& tasks, Tu tq);
Schedule simulate_fcfs(const TaskSet& tasks);

/// Task k gets max(1, floor(tq * weight_k / reference_weight)) per dispatch.
Schedule simulate_wrr(const TaskSet& tasks, Tu tq, std::int64_t reference_weight = 10);

/// Per-dispatch slice length under weighted round-robin.
Tu wrr_slice(Tu tq, std::int64_t weight, std::int64_t reference_weight);

Schedule simulate(const TaskSet& tasks, const SimConfig& config);

} // namespace ctq
