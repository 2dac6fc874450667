#pragma once

#include <cstdint>
#include <optional>

#include "afkit/core/framework.hpp"
#include "afkit/core/semantics.hpp"

namespace afkit {

/// True iff S is a sigma-extension of F. Maximality conditions (PR, SST, STG)
/// are settled by a search for a strictly better witness; GR and ID compare
/// against the unique extension. Throws UnknownArgument, and BudgetExceeded
/// when a node budget is given and exhausted.
bool verify(Semantics sem, const Framework& f, const Extension& s,
            std::optional<std::uint64_t> node_budget = std::nullopt);
bool verify(Semantics sem, const Framework& f, const ArgSet& s,
            std::optional<std::uint64_t> node_budget = std::nullopt);

}  // namespace afkit
