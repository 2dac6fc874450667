#pragma once

#include <cstddef>
#include <vector>

#include "afkit/core/framework.hpp"
#include "afkit/core/semantics.hpp"

namespace afkit {

inline constexpr std::size_t kDefaultOracleCap = 20;
/// Upper limit for a configured cap; tables take 2^cap entries each.
inline constexpr std::size_t kMaxOracleCap = 24;

/// Exact sigma(F) by scanning all 2^|A| subsets against the definitions.
/// Throws OracleCapExceeded when |A| > cap (or cap > kMaxOracleCap).
ExtensionSet oracle_enumerate(Semantics sem, const Framework& f, std::size_t cap = kDefaultOracleCap);
std::vector<ArgSet> oracle_enumerate_sets(Semantics sem, const Framework& f,
                                          std::size_t cap = kDefaultOracleCap);

ExtensionSet oracle_conflict_free(const Framework& f, std::size_t cap = kDefaultOracleCap);
ExtensionSet oracle_admissible(const Framework& f, std::size_t cap = kDefaultOracleCap);

}  // namespace afkit
