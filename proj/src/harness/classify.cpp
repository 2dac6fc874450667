#include "afkit/harness/classify.hpp"

#include <algorithm>

namespace afkit {

std::string_view to_string(HardnessCategory c) noexcept {
    switch (c) {
        case HardnessCategory::VeryEasy: return "very_easy";
        case HardnessCategory::Easy: return "easy";
        case HardnessCategory::Medium: return "medium";
        case HardnessCategory::Hard: return "hard";
        case HardnessCategory::TooHard: return "too_hard";
        case HardnessCategory::NotClassified: return "not_classified";
    }
    return "not_classified";
}

std::optional<HardnessCategory> parse_category(std::string_view text) noexcept {
    for (auto c : {HardnessCategory::VeryEasy, HardnessCategory::Easy, HardnessCategory::Medium,
                   HardnessCategory::Hard, HardnessCategory::TooHard, HardnessCategory::NotClassified})
        if (to_string(c) == text) return c;
    return std::nullopt;
}

std::string_view to_string(TaskGroup g) noexcept {
    switch (g) {
        case TaskGroup::A: return "A";
        case TaskGroup::B: return "B";
        case TaskGroup::C: return "C";
        case TaskGroup::D: return "D";
        case TaskGroup::E: return "E";
    }
    return "A";
}

std::optional<TaskGroup> parse_group(std::string_view text) noexcept {
    for (auto g : kAllGroups)
        if (to_string(g) == text) return g;
    return std::nullopt;
}

std::vector<TaskSpec> group_tasks(TaskGroup g) {
    using S = Semantics;
    switch (g) {
        case TaskGroup::A: return {TaskSpec::ds(S::PR, ""), TaskSpec::ee(S::PR), TaskSpec::ee(S::CO)};
        case TaskGroup::B:
            return {TaskSpec::dc(S::ST, ""), TaskSpec::ds(S::ST, ""), TaskSpec::ee(S::ST), TaskSpec::se(S::ST),
                    TaskSpec::dc(S::PR, ""), TaskSpec::se(S::PR), TaskSpec::dc(S::CO, "")};
        case TaskGroup::C:
            return {TaskSpec::ds(S::CO, ""), TaskSpec::se(S::CO), TaskSpec::dc(S::GR, ""), TaskSpec::se(S::GR)};
        case TaskGroup::D: return {TaskSpec::dc(S::ID, ""), TaskSpec::se(S::ID)};
        case TaskGroup::E:
            return {TaskSpec::dc(S::SST, ""), TaskSpec::ds(S::SST, ""), TaskSpec::ee(S::SST), TaskSpec::se(S::SST),
                    TaskSpec::dc(S::STG, ""), TaskSpec::ds(S::STG, ""), TaskSpec::ee(S::STG), TaskSpec::se(S::STG)};
    }
    return {};
}

TaskGroup group_of(const TaskSpec& task) {
    if (task.problem == Problem::D3) return TaskGroup::A;
    for (auto g : kAllGroups)
        for (const auto& t : group_tasks(g))
            if (t.problem == task.problem && t.semantics == task.semantics) return g;
    return TaskGroup::A;
}

TaskSpec representative_task(TaskGroup g) {
    switch (g) {
        case TaskGroup::B: return TaskSpec::ee(Semantics::ST);
        case TaskGroup::C: return TaskSpec::se(Semantics::GR);
        default: return TaskSpec::ee(Semantics::PR);
    }
}

TaskGroup benchmark_source(TaskGroup g) noexcept {
    return (g == TaskGroup::D || g == TaskGroup::E) ? TaskGroup::A : g;
}

HardnessCategory classify_hardness(const std::array<ReferenceRun, 3>& runs, const HardnessThresholds& t) {
    const auto crashes = std::count_if(runs.begin(), runs.end(), [](const ReferenceRun& r) { return r.crashed; });
    if (crashes >= 2) return HardnessCategory::NotClassified;
    auto finished_below = [](const ReferenceRun& r, double limit) {
        return !r.crashed && r.seconds && *r.seconds < limit;
    };
    auto all_below = [&](double limit) {
        return std::all_of(runs.begin(), runs.end(), [&](const ReferenceRun& r) { return finished_below(r, limit); });
    };
    if (all_below(t.very_easy)) return HardnessCategory::VeryEasy;
    if (all_below(t.easy)) return HardnessCategory::Easy;
    if (all_below(t.medium)) return HardnessCategory::Medium;
    const bool any = std::any_of(runs.begin(), runs.end(),
                                 [&](const ReferenceRun& r) { return !r.crashed && r.seconds && *r.seconds <= t.hard; });
    return any ? HardnessCategory::Hard : HardnessCategory::TooHard;
}

}  // namespace afkit
