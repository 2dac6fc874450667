#pragma once

// Semantics-level searches built on Labelling. Private to the library.

#include <functional>
#include <optional>
#include <vector>

#include "afkit/core/argset.hpp"
#include "afkit/core/framework.hpp"
#include "afkit/core/semantics.hpp"
#include "labelling.hpp"

namespace afkit::detail {

/// Receives each extension as it is found; returning false stops the search.
using OnFound = std::function<bool(const ArgSet&)>;

struct Restriction {
    std::size_t arg;
    std::uint8_t mask;
};

/// First labelling of the mode honouring the restrictions, as its in-set.
std::optional<ArgSet> first_extension(const Framework& f, LabelMode mode, NodeBudget& budget,
                                      const std::vector<Restriction>& restrictions = {});

/// A complete extension strictly containing s, if any.
std::optional<ArgSet> complete_superset(const Framework& f, const ArgSet& s, NodeBudget& budget);
/// A preferred extension containing the complete extension s.
ArgSet grow_preferred(const Framework& f, ArgSet s, NodeBudget& budget);

/// An extension of the mode (Complete or ConflictFree) whose range strictly
/// contains r, if any.
std::optional<ArgSet> larger_range(const Framework& f, LabelMode mode, const ArgSet& r, NodeBudget& budget);
/// Repeats larger_range from s until the range is maximal.
ArgSet grow_range(const Framework& f, LabelMode mode, ArgSet s, NodeBudget& budget);

/// Streams sigma(F) in search order. Every semantics is supported.
void enumerate_sets(Semantics sem, const Framework& f, NodeBudget& budget, const OnFound& on_found);
std::vector<ArgSet> enumerate_sets(Semantics sem, const Framework& f, NodeBudget& budget);

ArgSet ideal_set(const Framework& f, NodeBudget& budget);

}  // namespace afkit::detail
