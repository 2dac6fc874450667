#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "afkit/engine/task.hpp"

namespace afkit {

struct ResourceLimits {
    double wall_seconds = 600;
    std::uint64_t memory_bytes = 4ULL << 30;

    /// 600 s and 4 GiB; D3 gets 1800 s and 6.5 GiB.
    static ResourceLimits for_task(const TaskSpec& task);
};

/// Overrides from AFKIT_TIMEOUT (seconds) and AFKIT_MEMORY (bytes, with an
/// optional K, M or G suffix). Throws InvalidConfig on malformed values.
ResourceLimits apply_env_overrides(ResourceLimits limits);

/// Worker count from AFKIT_JOBS, else `fallback`, at least 1.
std::size_t jobs_from_env(std::size_t fallback);

/// Parses "4G", "512M", "100000" into bytes. Throws InvalidConfig.
std::uint64_t parse_bytes(const std::string& text);

struct ProcessResult {
    bool spawned = false;
    std::string out;
    /// First 64 KiB of stderr.
    std::string err;
    double wall_seconds = 0;
    double cpu_seconds = 0;
    /// Exit code when the process exited normally, else -1.
    int exit_code = -1;
    /// Terminating signal, else 0.
    int signal = 0;
    bool timed_out = false;
    bool memory_exceeded = false;
    std::size_t peak_rss_bytes = 0;
    std::string error;
};

/// Runs argv[0] (looked up on PATH) in its own process group with stdin
/// closed, an address-space limit, and a watchdog that samples resident
/// memory every 100 ms. The whole group is killed when the wall limit or the
/// memory limit is hit, and after the main process exits.
ProcessResult run_process(const std::vector<std::string>& argv, const ResourceLimits& limits);

}  // namespace afkit
