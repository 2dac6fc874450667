#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "afkit/core/framework.hpp"
#include "afkit/core/semantics.hpp"
#include "afkit/engine/oracle.hpp"
#include "afkit/engine/task.hpp"

namespace afkit {

struct EngineOptions {
    /// Cap on search nodes per call; BudgetExceeded when exhausted.
    std::optional<std::uint64_t> node_budget;
};

enum class Backend { Oracle, Optimized };

struct SolveOptions {
    Backend backend = Backend::Optimized;
    std::size_t oracle_cap = kDefaultOracleCap;
    EngineOptions engine;
};

/// Answers a task from oracle_enumerate. SE returns the least extension in
/// canonical order. Throws MalformedTask, UnknownArgument, OracleCapExceeded.
Answer solve(const TaskSpec& task, const Framework& f, std::size_t oracle_cap = kDefaultOracleCap);

/// Same contract as solve, answered by labelling search.
/// Throws MalformedTask, UnknownArgument, BudgetExceeded.
Answer solve_optimized(const TaskSpec& task, const Framework& f, const EngineOptions& opts = {});

Answer solve_with(const TaskSpec& task, const Framework& f, const SolveOptions& opts);

/// sigma(F) in canonical order.
ExtensionSet enumerate(Semantics sem, const Framework& f, const EngineOptions& opts = {});

/// (GR, ST, PR) enumerations sharing one grounded computation.
D3Triple d3(const Framework& f, const EngineOptions& opts = {});

/// The largest admissible subset of the intersection of all preferred extensions.
Extension ideal_extension(const Framework& f, const EngineOptions& opts = {});

}  // namespace afkit
