#include "afkit/engine/engine.hpp"

#include <algorithm>

#include "afkit/core/predicates.hpp"
#include "search.hpp"

namespace afkit {
namespace {

using detail::kIn;
using detail::kOut;
using detail::LabelMode;
using detail::NodeBudget;

void check_task(const TaskSpec& task, const Framework& f) {
    task.validate();
    if (task.query) f.index(*task.query);
}

Answer from_extensions(const TaskSpec& task, const ExtensionSet& exts) {
    switch (task.problem) {
        case Problem::EE: return Enumeration{exts};
        case Problem::SE:
            if (exts.empty()) return SingleExtension{};
            return SingleExtension{exts.front()};
        case Problem::DC:
            return Verdict{std::any_of(exts.begin(), exts.end(),
                                       [&](const Extension& e) { return e.contains(*task.query); })};
        case Problem::DS:
            return Verdict{std::all_of(exts.begin(), exts.end(),
                                       [&](const Extension& e) { return e.contains(*task.query); })};
        case Problem::D3: break;
    }
    throw MalformedTask("D3 is not answered from a single enumeration");
}

// True iff some streamed extension satisfies pred; stops at the first one.
bool any_extension(Semantics sem, const Framework& f, NodeBudget& budget,
                   const std::function<bool(const ArgSet&)>& pred) {
    bool hit = false;
    detail::enumerate_sets(sem, f, budget, [&](const ArgSet& s) {
        hit = pred(s);
        return !hit;
    });
    return hit;
}

bool stable_exists(const Framework& f, NodeBudget& budget) {
    return detail::first_extension(f, LabelMode::Stable, budget).has_value();
}

bool credulous(Semantics sem, const Framework& f, std::size_t x, NodeBudget& budget) {
    switch (sem) {
        case Semantics::CO:
        case Semantics::PR:
            // Every complete extension is inside a preferred one.
            return detail::first_extension(f, LabelMode::Complete, budget, {{x, kIn}}).has_value();
        case Semantics::ST: return detail::first_extension(f, LabelMode::Stable, budget, {{x, kIn}}).has_value();
        case Semantics::SST:
        case Semantics::STG:
            if (stable_exists(f, budget)) return credulous(Semantics::ST, f, x, budget);
            return any_extension(sem, f, budget, [&](const ArgSet& s) { return s.contains(x); });
        case Semantics::GR: return grounded(f).contains(x);
        case Semantics::ID: return detail::ideal_set(f, budget).contains(x);
    }
    return false;
}

bool skeptical(Semantics sem, const Framework& f, std::size_t x, NodeBudget& budget) {
    switch (sem) {
        case Semantics::CO:
        case Semantics::GR: return grounded(f).contains(x);
        case Semantics::PR: {
            const ArgSet g = grounded(f);
            if (g.contains(x)) return true;
            if (attacked_by(f, g).contains(x)) return false;
            return !any_extension(sem, f, budget, [&](const ArgSet& s) { return !s.contains(x); });
        }
        case Semantics::ST:
            // Vacuously true when no stable extension exists.
            return !detail::first_extension(f, LabelMode::Stable, budget, {{x, kOut}});
        case Semantics::SST:
        case Semantics::STG:
            if (stable_exists(f, budget)) return skeptical(Semantics::ST, f, x, budget);
            return !any_extension(sem, f, budget, [&](const ArgSet& s) { return !s.contains(x); });
        case Semantics::ID: return detail::ideal_set(f, budget).contains(x);
    }
    return false;
}

std::optional<ArgSet> some_extension(Semantics sem, const Framework& f, NodeBudget& budget) {
    switch (sem) {
        case Semantics::CO:
        case Semantics::GR: return grounded(f);
        case Semantics::PR: return detail::grow_preferred(f, grounded(f), budget);
        case Semantics::ST: return detail::first_extension(f, LabelMode::Stable, budget);
        case Semantics::SST:
            if (auto st = detail::first_extension(f, LabelMode::Stable, budget)) return st;
            return detail::grow_range(f, LabelMode::Complete, grounded(f), budget);
        case Semantics::STG:
            if (auto st = detail::first_extension(f, LabelMode::Stable, budget)) return st;
            return detail::grow_range(f, LabelMode::ConflictFree, f.empty_set(), budget);
        case Semantics::ID: return detail::ideal_set(f, budget);
    }
    return std::nullopt;
}

}  // namespace

Answer solve(const TaskSpec& task, const Framework& f, std::size_t oracle_cap) {
    check_task(task, f);
    if (task.problem == Problem::D3)
        return D3Triple{oracle_enumerate(Semantics::GR, f, oracle_cap), oracle_enumerate(Semantics::ST, f, oracle_cap),
                        oracle_enumerate(Semantics::PR, f, oracle_cap)};
    return from_extensions(task, oracle_enumerate(*task.semantics, f, oracle_cap));
}

Answer solve_optimized(const TaskSpec& task, const Framework& f, const EngineOptions& opts) {
    check_task(task, f);
    NodeBudget budget(opts.node_budget);
    switch (task.problem) {
        case Problem::D3: return d3(f, opts);
        case Problem::EE: return Enumeration{enumerate(*task.semantics, f, opts)};
        case Problem::SE: {
            auto s = some_extension(*task.semantics, f, budget);
            if (!s) return SingleExtension{};
            return SingleExtension{f.to_extension(*s)};
        }
        case Problem::DC: return Verdict{credulous(*task.semantics, f, f.index(*task.query), budget)};
        case Problem::DS: return Verdict{skeptical(*task.semantics, f, f.index(*task.query), budget)};
    }
    return Verdict{};
}

Answer solve_with(const TaskSpec& task, const Framework& f, const SolveOptions& opts) {
    if (opts.backend == Backend::Oracle) return solve(task, f, opts.oracle_cap);
    return solve_optimized(task, f, opts.engine);
}

ExtensionSet enumerate(Semantics sem, const Framework& f, const EngineOptions& opts) {
    NodeBudget budget(opts.node_budget);
    return f.to_extensions(detail::enumerate_sets(sem, f, budget));
}

D3Triple d3(const Framework& f, const EngineOptions& opts) {
    NodeBudget budget(opts.node_budget);
    D3Triple out;
    out.grounded = {grounded_extension(f)};
    out.stable = f.to_extensions(detail::enumerate_sets(Semantics::ST, f, budget));
    out.preferred = f.to_extensions(detail::enumerate_sets(Semantics::PR, f, budget));
    return out;
}

Extension ideal_extension(const Framework& f, const EngineOptions& opts) {
    NodeBudget budget(opts.node_budget);
    return f.to_extension(detail::ideal_set(f, budget));
}

}  // namespace afkit
