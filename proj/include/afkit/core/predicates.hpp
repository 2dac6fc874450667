#pragma once

#include <cstddef>

#include "afkit/core/argset.hpp"
#include "afkit/core/framework.hpp"

// Set-level predicates from Dung's theory. The ArgSet overloads work on
// framework indices; the Extension overloads resolve names first and throw
// UnknownArgument for ids outside the framework.

namespace afkit {

bool is_conflict_free(const Framework& f, const ArgSet& s);
/// True iff every attacker of `a` is attacked by some member of `s`.
bool defends(const Framework& f, const ArgSet& s, std::size_t a);
/// s together with everything s attacks.
ArgSet range_of(const Framework& f, const ArgSet& s);
/// Everything attacked by some member of s.
ArgSet attacked_by(const Framework& f, const ArgSet& s);
/// All arguments defended by s (the characteristic function).
ArgSet defended_by(const Framework& f, const ArgSet& s);

bool is_admissible(const Framework& f, const ArgSet& s);
bool is_complete(const Framework& f, const ArgSet& s);
bool is_stable(const Framework& f, const ArgSet& s);

/// Least fixed point of the characteristic function, iterated from the empty set.
ArgSet grounded(const Framework& f);

/// Largest admissible subset of a conflict-free set, obtained by repeatedly
/// dropping members that the remaining set fails to defend.
ArgSet largest_admissible_subset(const Framework& f, ArgSet s);

bool is_conflict_free(const Framework& f, const Extension& s);
bool defends(const Framework& f, const Extension& s, std::string_view a);
Extension range_of(const Framework& f, const Extension& s);
Extension grounded_extension(const Framework& f);

}  // namespace afkit
