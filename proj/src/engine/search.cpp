#include "search.hpp"

#include <unordered_set>

#include "afkit/core/predicates.hpp"

namespace afkit::detail {
namespace {

constexpr auto kNoPrune = [](const Labelling&) { return false; };

bool contained_in_any(const ArgSet& s, const std::vector<ArgSet>& sets) {
    for (const auto& t : sets)
        if (s.is_subset_of(t)) return true;
    return false;
}

bool strictly_inside_any(const ArgSet& s, const std::vector<ArgSet>& sets) {
    for (const auto& t : sets)
        if (s.is_proper_subset_of(t)) return true;
    return false;
}

void enumerate_all(const Framework& f, LabelMode mode, NodeBudget& budget, const OnFound& on_found) {
    Labelling l(f, mode, budget);
    l.search(kNoPrune, [&](const ArgSet& in, const ArgSet&) { return !on_found(in); });
}

// Preferred extensions: complete labellings whose in-set is not inside a known
// preferred extension are grown to a maximal one.
void enumerate_preferred(const Framework& f, NodeBudget& budget, const OnFound& on_found) {
    std::vector<ArgSet> found;
    Labelling l(f, LabelMode::Complete, budget);
    l.search([&](const Labelling& node) { return contained_in_any(node.possible(kIn), found); },
             [&](const ArgSet& in, const ArgSet&) {
                 if (contained_in_any(in, found)) return false;
                 found.push_back(grow_preferred(f, in, budget));
                 return !on_found(found.back());
             });
}

// Range-maximal members of the mode's labellings (SST for Complete, STG for
// ConflictFree). Pruning is strict so ties in range are all reached.
void enumerate_range_maximal(const Framework& f, LabelMode mode, NodeBudget& budget, const OnFound& on_found) {
    std::vector<ArgSet> ranges;
    std::unordered_set<ArgSet, ArgSetHash> seen;
    auto add = [&](const ArgSet& ext, const ArgSet& range) {
        if (!seen.insert(ext).second) return true;
        bool known = false;
        for (const auto& r : ranges)
            if (r == range) known = true;
        if (!known) ranges.push_back(range);
        return on_found(ext);
    };
    Labelling l(f, mode, budget);
    l.search([&](const Labelling& node) { return strictly_inside_any(node.possible(kIn | kOut), ranges); },
             [&](const ArgSet& in, const ArgSet& out) {
                 const ArgSet range = in | out;
                 if (strictly_inside_any(range, ranges)) return false;
                 for (const auto& r : ranges)
                     if (r == range) return !add(in, range);
                 const ArgSet best = grow_range(f, mode, in, budget);
                 return !add(best, range_of(f, best));
             });
}

}  // namespace

std::optional<ArgSet> first_extension(const Framework& f, LabelMode mode, NodeBudget& budget,
                                      const std::vector<Restriction>& restrictions) {
    Labelling l(f, mode, budget);
    for (const auto& r : restrictions) l.restrict(r.arg, r.mask);
    std::optional<ArgSet> result;
    l.search(kNoPrune, [&](const ArgSet& in, const ArgSet&) {
        result = in;
        return true;
    });
    return result;
}

std::optional<ArgSet> complete_superset(const Framework& f, const ArgSet& s, NodeBudget& budget) {
    Labelling l(f, LabelMode::Complete, budget);
    s.for_each([&](std::size_t a) { l.restrict(a, kIn); });
    std::optional<ArgSet> result;
    l.search([&](const Labelling& node) { return node.possible(kIn) == s; },
             [&](const ArgSet& in, const ArgSet&) {
                 if (in == s) return false;
                 result = in;
                 return true;
             });
    return result;
}

ArgSet grow_preferred(const Framework& f, ArgSet s, NodeBudget& budget) {
    while (auto bigger = complete_superset(f, s, budget)) s = std::move(*bigger);
    return s;
}

std::optional<ArgSet> larger_range(const Framework& f, LabelMode mode, const ArgSet& r, NodeBudget& budget) {
    Labelling l(f, mode, budget);
    r.for_each([&](std::size_t a) { l.restrict(a, kIn | kOut); });
    std::optional<ArgSet> result;
    l.search([&](const Labelling& node) { return node.possible(kIn | kOut) == r; },
             [&](const ArgSet& in, const ArgSet& out) {
                 if ((in | out) == r) return false;
                 result = in;
                 return true;
             });
    return result;
}

ArgSet grow_range(const Framework& f, LabelMode mode, ArgSet s, NodeBudget& budget) {
    while (auto better = larger_range(f, mode, range_of(f, s), budget)) s = std::move(*better);
    return s;
}

void enumerate_sets(Semantics sem, const Framework& f, NodeBudget& budget, const OnFound& on_found) {
    switch (sem) {
        case Semantics::CO: enumerate_all(f, LabelMode::Complete, budget, on_found); return;
        case Semantics::ST: enumerate_all(f, LabelMode::Stable, budget, on_found); return;
        case Semantics::PR: enumerate_preferred(f, budget, on_found); return;
        case Semantics::SST:
        case Semantics::STG:
            // Both coincide with ST whenever a stable extension exists.
            if (first_extension(f, LabelMode::Stable, budget)) {
                enumerate_all(f, LabelMode::Stable, budget, on_found);
                return;
            }
            enumerate_range_maximal(f, sem == Semantics::SST ? LabelMode::Complete : LabelMode::ConflictFree,
                                    budget, on_found);
            return;
        case Semantics::GR: on_found(grounded(f)); return;
        case Semantics::ID: on_found(ideal_set(f, budget)); return;
    }
}

std::vector<ArgSet> enumerate_sets(Semantics sem, const Framework& f, NodeBudget& budget) {
    std::vector<ArgSet> out;
    enumerate_sets(sem, f, budget, [&](const ArgSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

ArgSet ideal_set(const Framework& f, NodeBudget& budget) {
    ArgSet common = f.all();
    enumerate_preferred(f, budget, [&](const ArgSet& p) {
        common &= p;
        return true;
    });
    return largest_admissible_subset(f, std::move(common));
}

}  // namespace afkit::detail
