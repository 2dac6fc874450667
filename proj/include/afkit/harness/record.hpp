#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "afkit/engine/task.hpp"
#include "afkit/harness/judge.hpp"
#include "afkit/io/solution.hpp"

namespace afkit {

/// How a solver process ended.
enum class Termination { Exited, Timeout, Memout, Crashed, SpawnFailed };

std::string_view to_string(Termination t) noexcept;
std::optional<Termination> parse_termination(std::string_view text) noexcept;

/// One solver run on one (task, instance) pair.
///
/// Invariant once judged: points == points_for(verdict).
struct JobRecord {
    std::string solver;
    TaskSpec task;
    std::string instance;
    SolutionText output;
    double elapsed = 0;  // wall seconds
    double cpu = 0;      // user+system seconds
    int exit_status = 0;
    Termination termination = Termination::Exited;
    std::string diagnostic;

    Outcome verdict = Outcome::Zero;
    int points = 0;
    bool unchecked = false;
    std::string reason;

    void set_judgement(const Judgement& j) {
        verdict = j.outcome;
        points = j.points();
        unchecked = j.unchecked;
        reason = j.reason;
    }
    /// Task name plus the query, which together with the instance identify
    /// the question being answered.
    std::string question() const;
};

/// One JSON object per line; `parsed` is rebuilt from `raw` on read.
std::string to_json_line(const JobRecord& r);
JobRecord record_from_json_line(std::string_view line);

/// Skips blank lines. Throws ParseError with the line number.
std::vector<JobRecord> read_log(const std::filesystem::path& path);

}  // namespace afkit
