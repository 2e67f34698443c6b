// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "ctq/analytic.hpp"
#include "ctq/engine.hpp"
#include "ctq/experiment.hpp"
#include "ctq/simulator.hpp"
#include "ctq/workload.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace ctq;
using BigRational = boost::multiprecision::cpp_rational;

namespace {

struct Check {
    std::ostringstream why;
    bool ok = true;

    template <typename A, typename B>
    void equal(const A& got, const B& want, const char* what)
    {
        if (!(got == want)) {
            ok = false;
            why << what << " mismatch; ";
        }
    }
    void that(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            why << what << "; ";
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Tu> starts_of(const std::vector<Slice>& slices)
{
    std::vector<Tu> out;
    for (const auto& s : slices)
        out.push_back(s.start);
    return out;
}

// Round boundaries: every slice start of round q followed by the last end.
std::vector<Tu> boundaries(const Schedule& s, std::int64_t q)
{
    std::vector<Tu> out;
    for (const auto& sl : s.slices)
        if (sl.round == q)
            out.push_back(sl.start);
    for (auto it = s.slices.rbegin(); it != s.slices.rend(); ++it)
        if (it->round == q) {
            out.push_back(it->end);
            break;
        }
    return out;
}

void criterion_1(Check& c)
{
    const auto t0 = Clock::now();
    const auto tasks = TaskSet::from_bursts({24, 3, 3});
    const auto schedule = simulate_fixed_rr(tasks, 4);
    const auto report = metrics_from_schedule(schedule, tasks);
    const auto profile = waiting_profile(tasks, 4);
    const double elapsed = seconds_since(t0);

    c.equal(starts_of(schedule.slices), std::vector<Tu>{0, 4, 7, 10, 14, 18, 22, 26}, "slice starts");
    c.equal(schedule.makespan(), Tu{30}, "makespan");
    std::vector<std::int64_t> ntqs, switches;
    std::vector<Tu> sltqs;
    for (const auto& e : profile.per_task) {
        ntqs.push_back(e.ntq);
        sltqs.push_back(e.sltq);
    }
    for (const auto& m : report.per_task)
        switches.push_back(m.context_switches);
    c.equal(ntqs, std::vector<std::int64_t>{5, 0, 0}, "NTQ");
    c.equal(sltqs, std::vector<Tu>{26, 4, 7}, "SLTQ");
    c.equal(switches, std::vector<std::int64_t>{1, 0, 0}, "context switches");
    c.that(elapsed < 1e-3, "took " + std::to_string(elapsed * 1e3) + " ms (limit 1 ms)");
}

void criterion_2(Check& c)
{
    const auto tasks = TaskSet::from_bursts({20, 20, 5, 3, 1});
    const auto report = metrics_from_schedule(simulate_fixed_rr(tasks, 1), tasks);
    c.equal(report.avg_waiting, Rational(17), "AVGWT");
    c.equal(report.avg_turnaround, Rational(134, 5), "avg turnaround");
    c.equal(report.avg_turnaround.to_string(), std::string("26.8"), "avg turnaround text");
    c.equal(report.total_context_switches, std::int64_t{44}, "context switches");
}

void criterion_3(Check& c)
{
    const auto tasks = TaskSet::from_bursts({20, 20, 5, 3, 1});
    const auto trace = run_ctq(tasks, 1);
    c.equal(trace.tq_sequence, std::vector<Tu>{1, 2, 2, 15}, "tq sequence");
    c.equal(boundaries(trace.schedule, 2), std::vector<Tu>{5, 7, 9, 11, 13}, "round 2 boundaries");
    c.equal(boundaries(trace.schedule, 4), std::vector<Tu>{19, 34, 49}, "round 4 boundaries");
    std::vector<Tu> completions;
    for (const auto& m : trace.metrics.per_task)
        completions.push_back(m.completion);
    c.equal(completions, std::vector<Tu>{34, 49, 19, 13, 5}, "completions");
    c.equal(trace.metrics.avg_waiting, Rational(71, 5), "AVGWT");
    c.equal(trace.metrics.avg_waiting.to_string(), std::string("14.2"), "AVGWT text");
    c.equal(trace.metrics.avg_turnaround, Rational(24), "avg turnaround");
    c.equal(trace.metrics.total_context_switches, std::int64_t{9}, "context switches");
}

void criterion_4(Check& c)
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240401);
    std::int64_t comparisons = 0;
    for (int set = 0; set < 1000 && c.ok; ++set) {
        const auto n = static_cast<std::size_t>(uniform_draw(rng, 1, 10));
        std::vector<Tu> bursts(n);
        for (auto& b : bursts)
            b = static_cast<Tu>(uniform_draw(rng, 1, 60));
        const auto tasks = TaskSet::from_bursts(bursts);
        for (Tu tq = 1; tq <= tasks.largest_burst(); ++tq) {
            const auto profile = waiting_profile(tasks, tq);
            const auto report = metrics_from_schedule(simulate_fixed_rr(tasks, tq), tasks);
            for (std::size_t i = 0; i < n; ++i) {
                const auto& a = profile.per_task[i];
                const auto& s = report.per_task[i];
                ++comparisons;
                if (a.waiting != s.waiting || a.ntq != s.slice_count - 1 || a.sltq != s.last_slice_start) {
                    c.that(false, "set " + std::to_string(set) + " tq " + std::to_string(tq) +
                                      " task " + std::to_string(i) + " disagrees");
                    break;
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    c.that(comparisons > 0, "nothing compared");
    c.that(elapsed < 60.0, "took " + std::to_string(elapsed) + " s (limit 60 s)");
}

void criterion_5(Check& c)
{
    std::mt19937_64 rng(555);
    for (int set = 0; set < 200; ++set) {
        const auto n = static_cast<std::size_t>(uniform_draw(rng, 1, 12));
        std::vector<Tu> bursts(n);
        for (auto& b : bursts)
            b = static_cast<Tu>(uniform_draw(rng, 1, 100));
        const auto tasks = TaskSet::from_bursts(bursts);
        if (simulate_fixed_rr(tasks, tasks.largest_burst()) != simulate_fcfs(tasks)) {
            c.that(false, "set " + std::to_string(set) + " differs from FCFS");
            return;
        }
    }
}

// Thirty (n, burst range) combinations: n in {5, 10, ..., 50} crossed with
// bursts uniform on [1, 100], [1, 300] and [1, 500]. Each combination is
// evaluated over several task sets and contributes its per-set mean.
constexpr std::int64_t kSetsPerCombination = 10;

struct Combination {
    WorkloadSpec spec;
    std::vector<WorkloadOutcome> outcomes;
};

std::vector<Combination> g_combinations;

BigRational exact(const Rational& r)
{
    return {r.num(), r.den()};
}

void criterion_6(Check& c)
{
    const auto t0 = Clock::now();
    std::uint64_t seed = 1000;
    for (std::int64_t n = 5; n <= 50; n += 5)
        for (Tu burst_max : {100, 300, 500}) {
            const WorkloadSpec spec{.n = n, .burst_min = 1, .burst_max = burst_max, .seed = seed++};
            g_combinations.push_back({spec, evaluate_all(generate_batch(spec, kSetsPerCombination))});
        }

    BigRational rr_wt, ctq_wt, rr_tat, ctq_tat, rr_cs, ctq_cs;
    std::int64_t sets = 0, improved = 0, worse = 0;
    for (const auto& combo : g_combinations) {
        BigRational c_rr_wt, c_ctq_wt, c_rr_tat, c_ctq_tat, c_rr_cs, c_ctq_cs;
        for (const auto& o : combo.outcomes) {
            c_rr_wt += exact(o.rr.avg_waiting);
            c_ctq_wt += exact(o.ctq.metrics.avg_waiting);
            c_rr_tat += exact(o.rr.avg_turnaround);
            c_ctq_tat += exact(o.ctq.metrics.avg_turnaround);
            c_rr_cs += o.rr.total_context_switches;
            c_ctq_cs += o.ctq.metrics.total_context_switches;
            ++sets;
            improved += o.ctq.metrics.total_waiting < o.rr.total_waiting;
            worse += o.ctq.metrics.total_waiting > o.rr.total_waiting;
        }
        const auto k = static_cast<std::int64_t>(combo.outcomes.size());
        rr_wt += c_rr_wt / k;
        ctq_wt += c_ctq_wt / k;
        rr_tat += c_rr_tat / k;
        ctq_tat += c_ctq_tat / k;
        rr_cs += c_rr_cs / k;
        ctq_cs += c_ctq_cs / k;
    }
    const double elapsed = seconds_since(t0);
    const auto m = static_cast<std::int64_t>(g_combinations.size());
    const auto mean = [&](const BigRational& s) { return static_cast<double>(s / m); };

    std::cout << "    combinations=" << m << " task sets=" << sets << " ctq better on " << improved
              << ", worse on " << worse << '\n'
              << "    mean avg_wt   rr=" << mean(rr_wt) << " ctq=" << mean(ctq_wt) << '\n'
              << "    mean avg_tat  rr=" << mean(rr_tat) << " ctq=" << mean(ctq_tat) << '\n'
              << "    mean switches rr=" << mean(rr_cs) << " ctq=" << mean(ctq_cs) << '\n';

    c.that(m == 30, "expected 30 combinations");
    c.that(ctq_wt < rr_wt, "CTQ mean AVGWT not strictly below RR");
    c.that(ctq_tat < rr_tat, "CTQ mean avg turnaround not strictly below RR");
    c.that(ctq_cs <= rr_cs, "CTQ mean context switches above RR");
    c.that(elapsed < 300.0, "took " + std::to_string(elapsed) + " s (limit 300 s)");
}

void criterion_7(Check& c)
{
    const WorkloadSpec spec{.n = 20, .burst_min = 1, .burst_max = 500, .seed = 77};
    const auto first = render_csv(run_compare(spec, 10));
    const auto second = render_csv(run_compare(spec, 10));
    c.that(!first.empty(), "empty CSV");
    c.that(first == second, "CSV differs between identical invocations");
    c.that(first == render_csv(run_compare_serial(spec, 10)), "parallel and serial sweeps differ");
}

void criterion_8(Check& c)
{
    c.that(!g_combinations.empty(), "criterion 6 produced no traces");
    std::int64_t checked = 0;
    for (const auto& combo : g_combinations) {
        for (const auto& outcome : combo.outcomes) {
            for (const auto& round : outcome.ctq.rounds) {
                if (round.q < 2)
                    continue;
                std::vector<Tu> residuals;
                for (const auto& r : round.survivors_before)
                    residuals.push_back(r.residual);
                ++checked;
                if (best_tq_serial(residuals).tq != round.tq_used) {
                    c.that(false, "seed " + std::to_string(combo.spec.seed) + " round " +
                                      std::to_string(round.q));
                    return;
                }
            }
        }
    }
    std::cout << "    rounds re-checked: " << checked << '\n';
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"AC1 three-task RR example (Gantt, NTQ, SLTQ, switches)", criterion_1},
        {"AC2 five-task fixed RR tq=1 (17 / 26.8 / 44)", criterion_2},
        {"AC3 five-task CTQ run (1,2,2,15 / 14.2 / 24 / 9)", criterion_3},
        {"AC4 closed form equals simulator on 1000 random sets", criterion_4},
        {"AC5 tq = LBT reproduces FCFS on 200 random sets", criterion_5},
        {"AC6 CTQ beats best-quantum fixed RR over 30 (n, BT) combinations", criterion_6},
        {"AC7 compare output is byte-identical across runs", criterion_7},
        {"AC8 recorded CTQ quanta re-derive from survivors", criterion_8},
    };

    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Check c;
        const auto t0 = Clock::now();
        try {
            run(c);
        } catch (const std::exception& e) {
            c.that(false, std::string("threw: ") + e.what());
        }
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << name << " (" << seconds_since(t0) << " s)";
        if (!c.ok) {
            std::cout << " -- " << c.why.str();
            ++failed;
        }
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
