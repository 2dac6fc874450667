#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "afkit/engine/task.hpp"

namespace afkit {

enum class HardnessCategory { VeryEasy, Easy, Medium, Hard, TooHard, NotClassified };

inline constexpr std::array<HardnessCategory, 5> kSelectableCategories = {
    HardnessCategory::VeryEasy, HardnessCategory::Easy, HardnessCategory::Medium, HardnessCategory::Hard,
    HardnessCategory::TooHard};

/// "very_easy", "easy", "medium", "hard", "too_hard", "not_classified".
std::string_view to_string(HardnessCategory c) noexcept;
std::optional<HardnessCategory> parse_category(std::string_view text) noexcept;

enum class TaskGroup { A, B, C, D, E };

inline constexpr std::array<TaskGroup, 5> kAllGroups = {TaskGroup::A, TaskGroup::B, TaskGroup::C, TaskGroup::D,
                                                       TaskGroup::E};

std::string_view to_string(TaskGroup g) noexcept;
std::optional<TaskGroup> parse_group(std::string_view text) noexcept;

/// Member tasks of a group, with the query left empty.
std::vector<TaskSpec> group_tasks(TaskGroup g);
/// The group whose benchmark set a task is evaluated on. D3 uses group A.
TaskGroup group_of(const TaskSpec& task);
/// EE-PR for A, EE-ST for B, SE-GR for C. D and E reuse A's benchmark set and
/// are represented by EE-PR as well.
TaskSpec representative_task(TaskGroup g);
/// Group whose classified pool a group draws its instances from.
TaskGroup benchmark_source(TaskGroup g) noexcept;

/// One reference run at twice the competition timeout. `seconds` is empty when
/// the run did not finish in time. A crash is a nonzero exit or unparsable
/// output.
struct ReferenceRun {
    std::optional<double> seconds;
    bool crashed = false;
};

/// Thresholds in seconds for the hardness ladder.
struct HardnessThresholds {
    double very_easy = 6.0;
    double easy = 60.0;
    double medium = 600.0;
    double hard = 1200.0;
};

/// Topmost category whose condition holds. Two or more crashes make the
/// instance unclassified. A crashed run never counts as finished.
HardnessCategory classify_hardness(const std::array<ReferenceRun, 3>& runs, const HardnessThresholds& t = {});

}  // namespace afkit
