#include "ctq/analytic.hpp"

#include "ctq/error.hpp"

#include <algorithm>
#include <string>

namespace ctq {

namespace {

void require_quantum(Tu tq)
{
    if (tq < 1)
        throw ValidationError("time quantum must be >= 1, got " + std::to_string(tq));
}

void require_bursts(std::span<const Tu> bursts)
{
    if (bursts.empty())
        throw ValidationError("task set is empty");
    for (Tu b : bursts)
        if (b < 1)
            throw ValidationError("burst must be >= 1, got " + std::to_string(b));
}

// sltq with ntq values precomputed for the whole queue.
Tu sltq_with(std::span<const Tu> bursts, std::span<const std::int64_t> full, Tu tq, std::size_t i)
{
    const std::int64_t own = full[i];
    Tu start = 0;
    if (own == 0) {
        for (std::size_t k = 0; k < i; ++k)
            start += full[k] > 0 ? tq : bursts[k];
        return start;
    }

    start = own * tq;
    for (std::size_t k = 0; k < bursts.size(); ++k) {
        if (k == i)
            continue;
        if (full[k] < own || (full[k] == own && k < i))
            start += bursts[k];
        else if (k > i)
            start += own * tq;
        else
            start += (own + 1) * tq; // ahead of i and outlasting it
    }
    return start;
}

std::vector<std::int64_t> ntq_all(std::span<const Tu> bursts, Tu tq)
{
    std::vector<std::int64_t> full(bursts.size());
    for (std::size_t k = 0; k < bursts.size(); ++k)
        full[k] = ntq(bursts[k], tq);
    return full;
}

// Work (candidates * n^2) below which threading costs more than it saves.
constexpr std::int64_t kParallelThreshold = 1 << 16;

QuantumChoice pick(std::span<const Tu> totals, std::int64_t n)
{
    QuantumChoice choice;
    choice.candidates_evaluated = static_cast<std::int64_t>(totals.size());
    choice.total_waiting = totals[0];
    choice.tq = 1;
    for (std::size_t c = 1; c < totals.size(); ++c) {
        if (totals[c] <= choice.total_waiting) {
            choice.total_waiting = totals[c];
            choice.tq = static_cast<Tu>(c) + 1;
        }
    }
    choice.tied_candidates =
        std::count(totals.begin(), totals.end(), choice.total_waiting) - 1;
    choice.avg_waiting = Rational(choice.total_waiting, n);
    return choice;
}

} // namespace

std::int64_t ntq(Tu burst, Tu tq)
{
    if (burst < 1)
        throw ValidationError("burst must be >= 1, got " + std::to_string(burst));
    require_quantum(tq);
    if (burst % tq == 0)
        return burst / tq - 1;
    return burst / tq;
}

Tu sltq(std::span<const Tu> bursts, Tu tq, std::size_t pos)
{
    require_bursts(bursts);
    require_quantum(tq);
    if (pos >= bursts.size())
        throw ValidationError("queue position " + std::to_string(pos) + " out of range");
    const auto full = ntq_all(bursts, tq);
    return sltq_with(bursts, full, tq, pos);
}

Tu total_waiting(std::span<const Tu> bursts, Tu tq)
{
    const auto full = ntq_all(bursts, tq);
    Tu total = 0;
    for (std::size_t i = 0; i < bursts.size(); ++i)
        total += sltq_with(bursts, full, tq, i) - full[i] * tq;
    return total;
}

AnalyticProfile waiting_profile(const TaskSet& tasks, Tu tq)
{
    const auto bursts = tasks.bursts();
    require_bursts(bursts);
    require_quantum(tq);

    const auto full = ntq_all(bursts, tq);
    AnalyticProfile profile;
    profile.tq = tq;
    profile.per_task.reserve(bursts.size());
    for (std::size_t i = 0; i < bursts.size(); ++i) {
        AnalyticEntry e;
        e.task_id = tasks[i].id;
        e.ntq = full[i];
        e.sltq = sltq_with(bursts, full, tq, i);
        e.waiting = e.sltq - e.ntq * tq;
        profile.total_waiting += e.waiting;
        profile.per_task.push_back(e);
    }
    profile.avg_waiting = Rational(profile.total_waiting, static_cast<std::int64_t>(bursts.size()));
    return profile;
}

QuantumChoice best_tq_serial(std::span<const Tu> bursts)
{
    require_bursts(bursts);
    const Tu lbt = *std::max_element(bursts.begin(), bursts.end());
    std::vector<Tu> totals(static_cast<std::size_t>(lbt));
    for (Tu tq = 1; tq <= lbt; ++tq)
        totals[static_cast<std::size_t>(tq - 1)] = total_waiting(bursts, tq);
    return pick(totals, static_cast<std::int64_t>(bursts.size()));
}

QuantumChoice best_tq_parallel(std::span<const Tu> bursts)
{
    require_bursts(bursts);
    const Tu lbt = *std::max_element(bursts.begin(), bursts.end());
    std::vector<Tu> totals(static_cast<std::size_t>(lbt));

    // Each candidate writes its own slot; the argmin runs serially afterwards
    // so the tie-break never depends on thread timing.
#pragma omp parallel for schedule(dynamic, 16)
    for (Tu tq = 1; tq <= lbt; ++tq)
        totals[static_cast<std::size_t>(tq - 1)] = total_waiting(bursts, tq);

    return pick(totals, static_cast<std::int64_t>(bursts.size()));
}

QuantumChoice best_tq(std::span<const Tu> bursts)
{
    require_bursts(bursts);
    const auto n = static_cast<std::int64_t>(bursts.size());
    const Tu lbt = *std::max_element(bursts.begin(), bursts.end());
    if (lbt * n * n >= kParallelThreshold)
        return best_tq_parallel(bursts);
    return best_tq_serial(bursts);
}

} // namespace ctq
