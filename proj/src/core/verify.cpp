#include "afkit/core/verify.hpp"

#include "afkit/core/predicates.hpp"
#include "../engine/search.hpp"

namespace afkit {

bool verify(Semantics sem, const Framework& f, const ArgSet& s, std::optional<std::uint64_t> node_budget) {
    detail::NodeBudget budget(node_budget);
    switch (sem) {
        case Semantics::CO: return is_complete(f, s);
        case Semantics::ST: return is_stable(f, s);
        case Semantics::GR: return s == grounded(f);
        case Semantics::ID: return is_admissible(f, s) && s == detail::ideal_set(f, budget);
        case Semantics::PR:
            return is_complete(f, s) && !detail::complete_superset(f, s, budget);
        case Semantics::SST: {
            if (!is_complete(f, s)) return false;
            const ArgSet r = range_of(f, s);
            if (r.count() == f.size()) return true;
            return !detail::larger_range(f, detail::LabelMode::Complete, r, budget);
        }
        case Semantics::STG: {
            if (!is_conflict_free(f, s)) return false;
            const ArgSet r = range_of(f, s);
            if (r.count() == f.size()) return true;
            return !detail::larger_range(f, detail::LabelMode::ConflictFree, r, budget);
        }
    }
    return false;
}

bool verify(Semantics sem, const Framework& f, const Extension& s, std::optional<std::uint64_t> node_budget) {
    return verify(sem, f, f.to_set(s), node_budget);
}

}  // namespace afkit
