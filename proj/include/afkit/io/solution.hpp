#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "afkit/engine/task.hpp"

namespace afkit {

struct WriteOptions {
    /// Writes each extension of an enumeration on its own line. Readers that
    /// ignore whitespace accept both layouts.
    bool line_per_extension = false;
};

/// DC/DS: `YES` or `NO`. SE: `[a,b]` or `NO`. EE: `[[..],[..]]` in canonical
/// order. D3: three EE lines for grounded, stable, preferred. No trailing
/// newline. Throws MalformedTask when the answer shape does not fit the task.
std::string write_solution(const TaskSpec& task, const Answer& answer, WriteOptions options = {});

/// Raw solver output and its reading. An empty `parsed` is the "not parsable"
/// outcome, which scores zero.
struct SolutionText {
    std::string raw;
    std::optional<Answer> parsed;

    bool parsable() const noexcept { return parsed.has_value(); }
};

/// Whitespace-insensitive reader for the formats write_solution emits. Never
/// throws; any deviation leaves `parsed` empty.
SolutionText parse_solution(const TaskSpec& task, std::string_view text) noexcept;

}  // namespace afkit
