#include "afkit/engine/task.hpp"

#include "afkit/core/errors.hpp"

namespace afkit {

std::string_view to_string(Problem p) noexcept {
    switch (p) {
        case Problem::DC: return "DC";
        case Problem::DS: return "DS";
        case Problem::SE: return "SE";
        case Problem::EE: return "EE";
        case Problem::D3: return "D3";
    }
    return "?";
}

bool needs_query(Problem p) noexcept { return p == Problem::DC || p == Problem::DS; }

std::string TaskSpec::name() const {
    if (problem == Problem::D3) return "D3";
    std::string out(to_string(problem));
    out += '-';
    out += semantics ? std::string(to_string(*semantics)) : std::string("?");
    return out;
}

void TaskSpec::validate() const {
    if (problem == Problem::D3) {
        if (semantics) throw MalformedTask("D3 takes no semantics");
        if (query) throw MalformedTask("D3 takes no query argument");
        return;
    }
    if (!semantics) throw MalformedTask(std::string(to_string(problem)) + " requires a semantics");
    if (needs_query(problem) && !query) throw MalformedTask(name() + " requires a query argument");
    if (!needs_query(problem) && query) throw MalformedTask(name() + " takes no query argument");
    if (is_single_status(*semantics) && (problem == Problem::DS || problem == Problem::EE))
        throw MalformedTask(name() + " is not a task: only DC and SE exist for GR and ID");
}

std::optional<TaskSpec> parse_task_name(std::string_view name) {
    if (name == "D3") return TaskSpec::d3();
    const auto dash = name.find('-');
    if (dash == std::string_view::npos) return std::nullopt;
    const auto prob = name.substr(0, dash);
    const auto sem = parse_semantics(name.substr(dash + 1));
    if (!sem) return std::nullopt;
    TaskSpec t;
    t.semantics = *sem;
    if (prob == "DC") t.problem = Problem::DC;
    else if (prob == "DS") t.problem = Problem::DS;
    else if (prob == "SE") t.problem = Problem::SE;
    else if (prob == "EE") t.problem = Problem::EE;
    else return std::nullopt;
    if (is_single_status(*sem) && (t.problem == Problem::DS || t.problem == Problem::EE)) return std::nullopt;
    return t;
}

std::vector<std::string> all_task_names() {
    std::vector<std::string> out;
    for (auto s : kAllSemantics) {
        for (auto p : {Problem::DC, Problem::DS, Problem::SE, Problem::EE}) {
            if (is_single_status(s) && (p == Problem::DS || p == Problem::EE)) continue;
            out.push_back(std::string(to_string(p)) + "-" + std::string(to_string(s)));
        }
    }
    out.emplace_back("D3");
    return out;
}

bool shape_matches(Problem p, const Answer& a) noexcept {
    switch (p) {
        case Problem::DC:
        case Problem::DS: return std::holds_alternative<Verdict>(a);
        case Problem::SE: return std::holds_alternative<SingleExtension>(a);
        case Problem::EE: return std::holds_alternative<Enumeration>(a);
        case Problem::D3: return std::holds_alternative<D3Triple>(a);
    }
    return false;
}

}  // namespace afkit
