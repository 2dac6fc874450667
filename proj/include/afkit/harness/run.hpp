#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "afkit/harness/classify.hpp"
#include "afkit/harness/solver.hpp"

namespace afkit {

/// One question of a benchmark run.
///
/// Manifests are line-delimited JSON: {"instance": id, "path": file,
/// "format": "apx", "task": "DC-PR", "query": "a1", "domain": "erdos",
/// "category": "medium"}. Relative paths resolve against the manifest file.
struct ManifestEntry {
    std::string instance;
    std::filesystem::path path;
    InputFormat format = InputFormat::Apx;
    TaskSpec task;
    std::string domain;
    std::optional<HardnessCategory> category;
};

std::string to_json_line(const ManifestEntry& e);
/// Throws ParseError with the line number.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::vector<ManifestEntry>& entries, const std::filesystem::path& path);

struct RunOptions {
    /// Applies to every task when set; otherwise ResourceLimits::for_task.
    std::optional<ResourceLimits> limits;
    std::size_t jobs = 1;
    /// Judged records are appended here, one per line, flushed per record.
    std::optional<std::filesystem::path> log;
    std::size_t oracle_cap = 16;
    std::optional<std::uint64_t> reference_budget = 5'000'000;
    std::optional<std::uint64_t> verify_budget = 1'000'000;
};

/// Calls `work(i)` for i in [0, count) on `workers` threads.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& work);

/// Runs every solver on every entry, then judges each question with the
/// cascade over all solvers' answers. Records come back ordered by entry,
/// then solver, regardless of completion order.
std::vector<JobRecord> run_roster(const std::vector<SolverDescriptor>& solvers,
                                  const std::vector<ManifestEntry>& entries, const RunOptions& options);

}  // namespace afkit
