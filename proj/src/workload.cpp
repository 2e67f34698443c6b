#include "ctq/workload.hpp"

#include "ctq/error.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace ctq {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view field, std::size_t line, const char* what)
{
    field = trim(field);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw ValidationError("line " + std::to_string(line) + ": bad " + what + " '" +
                              std::string(field) + "'");
    return value;
}

std::vector<Task> draw_tasks(std::mt19937_64& rng, const WorkloadSpec& spec)
{
    std::vector<Task> tasks;
    tasks.reserve(static_cast<std::size_t>(spec.n));
    for (std::int64_t k = 0; k < spec.n; ++k) {
        const auto burst = uniform_draw(rng, static_cast<std::uint64_t>(spec.burst_min),
                                        static_cast<std::uint64_t>(spec.burst_max));
        tasks.push_back(Task{.id = static_cast<TaskId>(k + 1), .burst = static_cast<Tu>(burst)});
    }
    return tasks;
}

} // namespace

void validate(const WorkloadSpec& spec)
{
    if (spec.n < 1)
        throw ValidationError("workload needs n >= 1");
    if (spec.burst_min < 1)
        throw ValidationError("workload needs burst_min >= 1");
    if (spec.burst_max < spec.burst_min)
        throw ValidationError("workload burst range is empty");
    if (spec.n > std::numeric_limits<TaskId>::max())
        throw ValidationError("workload n too large");
}

std::uint64_t uniform_draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
    const std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max())
        return rng();
    const std::uint64_t range = span + 1;
    // Largest multiple of `range` representable; draws at or above it are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = rng();
    while (x >= limit)
        x = rng();
    return lo + x % range;
}

TaskSet generate(const WorkloadSpec& spec)
{
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    return TaskSet(draw_tasks(rng, spec));
}

std::vector<TaskSet> generate_batch(const WorkloadSpec& spec, std::int64_t runs)
{
    validate(spec);
    if (runs < 1)
        throw ValidationError("runs must be >= 1");
    std::mt19937_64 rng(spec.seed);
    std::vector<TaskSet> out;
    out.reserve(static_cast<std::size_t>(runs));
    for (std::int64_t r = 0; r < runs; ++r)
        out.emplace_back(draw_tasks(rng, spec));
    return out;
}

TaskSet load_tasks(std::string_view text)
{
    std::vector<Task> tasks;
    std::unordered_set<TaskId> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        std::vector<std::string_view> fields;
        for (std::size_t pos = 0;;) {
            const auto comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma - pos));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        if (fields.size() < 2 || fields.size() > 3)
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": expected id,burst[,weight]");

        const auto id = parse_int(fields[0], line_no, "id");
        const auto burst = parse_int(fields[1], line_no, "burst");
        const auto weight = fields.size() == 3 ? parse_int(fields[2], line_no, "weight") : 1;
        const std::string at = "line " + std::to_string(line_no) + ": ";
        if (id < 0 || id > std::numeric_limits<TaskId>::max())
            throw ValidationError(at + "id out of range");
        if (burst < 1)
            throw ValidationError(at + "burst must be >= 1");
        if (weight < 1)
            throw ValidationError(at + "weight must be >= 1");
        if (!seen.insert(static_cast<TaskId>(id)).second)
            throw ValidationError(at + "duplicate task id " + std::to_string(id));
        tasks.push_back(Task{.id = static_cast<TaskId>(id), .burst = burst, .weight = weight});
    }
    return TaskSet(std::move(tasks));
}

std::string save_tasks(const TaskSet& tasks)
{
    std::string out;
    for (const Task& t : tasks) {
        out += std::to_string(t.id) + "," + std::to_string(t.burst);
        if (t.weight != 1)
            out += "," + std::to_string(t.weight);
        out += "\n";
    }
    return out;
}

TaskSet load_tasks_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open task file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_tasks(buf.str());
}

} // namespace ctq
