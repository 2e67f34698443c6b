#pragma once

#include "ctq/model.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ctq {

enum class BurstDistribution { UniformInteger };

struct WorkloadSpec {
    std::int64_t n = 1;
    Tu burst_min = 1;
    Tu burst_max = 1;
    std::uint64_t seed = 0;
    BurstDistribution distribution = BurstDistribution::UniformInteger;
};

void validate(const WorkloadSpec& spec);

/// Bursts come from std::mt19937_64 (its output sequence is fixed by the
/// standard) reduced to [burst_min, burst_max] by rejection sampling, so a
/// seed yields the same task set on every platform. Ids are 1..n.
TaskSet generate(const WorkloadSpec& spec);

/// `runs` task sets drawn back to back from one generator seeded with
/// spec.seed; the first equals generate(spec).
std::vector<TaskSet> generate_batch(const WorkloadSpec& spec, std::int64_t runs);

/// Uniform draw from [lo, hi] by rejection; lo <= hi.
std::uint64_t uniform_draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// Task file: one `id,burst[,weight]` per line, `#` starts a comment, blank
/// lines ignored, LF or CRLF accepted. Errors carry the 1-based line number.
TaskSet load_tasks(std::string_view text);
std::string save_tasks(const TaskSet& tasks);

TaskSet load_tasks_file(const std::string& path);

} // namespace ctq
