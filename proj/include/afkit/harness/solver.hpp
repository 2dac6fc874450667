#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afkit/harness/process.hpp"
#include "afkit/harness/record.hpp"
#include "afkit/io/formats.hpp"

namespace afkit {

/// An external solver that follows the competition flag contract.
///
/// JSON form: {"id": "...", "command": ["path", "extra", ...],
/// "tasks": ["EE-PR", ...], "formats": ["apx", "tgf"]}. When "tasks" or
/// "formats" is missing, load_descriptor asks the solver via --problems and
/// --formats.
struct SolverDescriptor {
    std::string id;
    std::vector<std::string> command;
    std::vector<std::string> tasks;
    std::vector<InputFormat> formats;

    bool advertises(const TaskSpec& task) const;
    bool reads(InputFormat f) const;
};

/// Throws InvalidConfig on malformed descriptors.
SolverDescriptor parse_descriptor(std::string_view json_text, const std::filesystem::path& base_dir = {});
SolverDescriptor load_descriptor(const std::filesystem::path& path);

/// Parses a bracketed list such as "[DC-CO,EE-PR]" or "[apx,tgf]". Spaces
/// around items are tolerated. Throws InvalidConfig.
std::vector<std::string> parse_bracket_list(std::string_view text);

/// Runs `command -p <task> -f <file> -fo <format> [-a <arg>]` under the
/// limits and stores the output unjudged. Spawn failures, crashes and limit
/// kills are recorded, not thrown; their output never counts as an answer.
JobRecord run_job(const SolverDescriptor& solver, const TaskSpec& task, const std::string& instance_id,
                  const std::filesystem::path& instance_file, InputFormat format, const ResourceLimits& limits);

}  // namespace afkit
