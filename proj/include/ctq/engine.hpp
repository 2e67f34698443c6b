#pragma once

#include "ctq/analytic.hpp"
#include "ctq/model.hpp"

#include <optional>
#include <vector>

namespace ctq {

/// Changeable-time-quantum round-robin: every survivor runs once per round,
/// and the quantum for the next round is re-optimized over the survivors'
/// residual bursts with best_tq.

struct Residual {
    TaskId task_id = 0;
    Tu residual = 0;

    friend bool operator==(const Residual&, const Residual&) = default;
};

enum class QuantumSource { UserSupplied, Optimized };

struct RoundRecord {
    std::int64_t q = 1;
    Tu tq_used = 0;
    std::vector<Residual> survivors_before;
    std::vector<TaskId> completed_this_round;
    QuantumSource chosen_by = QuantumSource::Optimized;
    std::int64_t candidates_evaluated = 0; // 0 when user supplied
    std::int64_t tied_candidates = 0;
};

struct CtqTrace {
    std::vector<RoundRecord> rounds;
    Schedule schedule;
    MetricsReport metrics;
    std::vector<Tu> tq_sequence;
};

/// Bursts left after the listed rounds; tasks already done are dropped.
/// Valid because anyone still alive after round k ran its full quantum there.
std::vector<Residual> residual_times(const TaskSet& tasks, std::span<const Tu> tq_history);

struct RoundOutcome {
    std::vector<Slice> slices;
    std::vector<Residual> survivors;
    Tu clock = 0;
};

/// One pass over the survivors in FIFO order, each running min(tq, residual).
RoundOutcome run_round(std::span<const Residual> survivors, Tu tq, Tu clock, std::int64_t q);

/// With no `first_tq`, round 1 uses best_tq over the full set.
CtqTrace run_ctq(const TaskSet& tasks, std::optional<Tu> first_tq = std::nullopt);

/// Same algorithm, but every quantum scan uses best_tq_serial.
CtqTrace run_ctq_serial(const TaskSet& tasks, std::optional<Tu> first_tq = std::nullopt);

} // namespace ctq
