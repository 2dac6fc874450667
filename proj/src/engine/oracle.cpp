#include "afkit/engine/oracle.hpp"

#include <bit>
#include <cstdint>

#include "afkit/core/errors.hpp"

namespace afkit {
namespace {

using Mask = std::uint32_t;

// Per-subset tables for one framework. Index = subset bitmask.
struct Tables {
    std::size_t n = 0;
    Mask full = 0;
    std::vector<Mask> attackers;  // per argument
    std::vector<Mask> attacked;   // per subset: union of targets
    std::vector<char> cf;
    std::vector<char> admissible;
    std::vector<char> complete;

    explicit Tables(const Framework& f) : n(f.size()) {
        full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
        std::vector<Mask> targets(n, 0);
        attackers.assign(n, 0);
        for (const auto& [from, to] : f.attack_list()) {
            targets[from] |= Mask{1} << to;
            attackers[to] |= Mask{1} << from;
        }
        const std::size_t subsets = std::size_t{1} << n;
        attacked.assign(subsets, 0);
        cf.assign(subsets, 0);
        admissible.assign(subsets, 0);
        complete.assign(subsets, 0);
        for (std::size_t s = 1; s < subsets; ++s) {
            const auto low = static_cast<std::size_t>(std::countr_zero(s));
            attacked[s] = attacked[s & (s - 1)] | targets[low];
        }
        for (std::size_t s = 0; s < subsets; ++s) {
            const Mask m = static_cast<Mask>(s);
            cf[s] = (attacked[s] & m) == 0;
            if (!cf[s]) continue;
            Mask defended = 0;
            for (std::size_t a = 0; a < n; ++a)
                if ((attackers[a] & ~attacked[s]) == 0) defended |= Mask{1} << a;
            admissible[s] = (m & ~defended) == 0;
            complete[s] = defended == m;
        }
    }

    Mask range(std::size_t s) const { return static_cast<Mask>(s) | attacked[s]; }
};

// has_superset[m] = some marked mask is a superset of m.
std::vector<char> superset_closure(std::vector<char> marked, std::size_t n) {
    const std::size_t subsets = std::size_t{1} << n;
    for (std::size_t b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t m = 0; m < subsets; ++m)
            if (!(m & bit) && marked[m | bit]) marked[m] = 1;
    }
    return marked;
}

// has_subset[m] = some marked mask is a subset of m.
std::vector<char> subset_closure(std::vector<char> marked, std::size_t n) {
    const std::size_t subsets = std::size_t{1} << n;
    for (std::size_t b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t m = 0; m < subsets; ++m)
            if ((m & bit) && marked[m ^ bit]) marked[m] = 1;
    }
    return marked;
}

// True iff no marked mask strictly contains m (given the superset closure).
bool maximal_in(const std::vector<char>& sup, Mask m, std::size_t n) {
    for (std::size_t b = 0; b < n; ++b) {
        const Mask bit = Mask{1} << b;
        if (!(m & bit) && sup[m | bit]) return false;
    }
    return true;
}

bool minimal_in(const std::vector<char>& sub, Mask m, std::size_t n) {
    for (std::size_t b = 0; b < n; ++b) {
        const Mask bit = Mask{1} << b;
        if ((m & bit) && sub[m ^ bit]) return false;
    }
    return true;
}

// Members of `family` whose range is maximal among the ranges of `family`.
std::vector<Mask> range_maximal(const Tables& t, const std::vector<char>& family) {
    const std::size_t subsets = std::size_t{1} << t.n;
    std::vector<char> reached(subsets, 0);
    for (std::size_t s = 0; s < subsets; ++s)
        if (family[s]) reached[t.range(s)] = 1;
    const auto sup = superset_closure(std::move(reached), t.n);
    std::vector<Mask> out;
    for (std::size_t s = 0; s < subsets; ++s)
        if (family[s] && maximal_in(sup, t.range(s), t.n)) out.push_back(static_cast<Mask>(s));
    return out;
}

std::vector<Mask> inclusion_maximal(const std::vector<char>& family, std::size_t n) {
    const auto sup = superset_closure(family, n);
    std::vector<Mask> out;
    for (std::size_t s = 0; s < family.size(); ++s)
        if (family[s] && maximal_in(sup, static_cast<Mask>(s), n)) out.push_back(static_cast<Mask>(s));
    return out;
}

std::vector<Mask> enumerate_masks(Semantics sem, const Tables& t) {
    const std::size_t subsets = std::size_t{1} << t.n;
    std::vector<Mask> out;
    switch (sem) {
        case Semantics::CO:
            for (std::size_t s = 0; s < subsets; ++s)
                if (t.complete[s]) out.push_back(static_cast<Mask>(s));
            return out;
        case Semantics::PR: return inclusion_maximal(t.complete, t.n);
        case Semantics::ST:
            for (std::size_t s = 0; s < subsets; ++s)
                if (t.complete[s] && t.range(s) == t.full) out.push_back(static_cast<Mask>(s));
            return out;
        case Semantics::SST: return range_maximal(t, t.complete);
        case Semantics::STG: return range_maximal(t, t.cf);
        case Semantics::GR: {
            const auto sub = subset_closure(t.complete, t.n);
            for (std::size_t s = 0; s < subsets; ++s)
                if (t.complete[s] && minimal_in(sub, static_cast<Mask>(s), t.n))
                    out.push_back(static_cast<Mask>(s));
            return out;
        }
        case Semantics::ID: {
            Mask common = t.full;
            for (auto p : inclusion_maximal(t.complete, t.n)) common &= p;
            std::vector<char> family(subsets, 0);
            for (std::size_t s = 0; s < subsets; ++s)
                if (t.admissible[s] && (static_cast<Mask>(s) & ~common) == 0) family[s] = 1;
            return inclusion_maximal(family, t.n);
        }
    }
    return out;
}

void check_cap(const Framework& f, std::size_t cap) {
    if (cap > kMaxOracleCap || f.size() > cap) throw OracleCapExceeded(f.size(), std::min(cap, kMaxOracleCap));
}

std::vector<ArgSet> to_sets(const std::vector<Mask>& masks, std::size_t n) {
    std::vector<ArgSet> out;
    out.reserve(masks.size());
    for (Mask m : masks) {
        ArgSet s(n);
        for (std::size_t i = 0; i < n; ++i)
            if (m & (Mask{1} << i)) s.insert(i);
        out.push_back(std::move(s));
    }
    return out;
}

ExtensionSet family_to_extensions(const Framework& f, const std::vector<char>& family) {
    std::vector<Mask> masks;
    for (std::size_t s = 0; s < family.size(); ++s)
        if (family[s]) masks.push_back(static_cast<Mask>(s));
    return f.to_extensions(to_sets(masks, f.size()));
}

}  // namespace

std::vector<ArgSet> oracle_enumerate_sets(Semantics sem, const Framework& f, std::size_t cap) {
    check_cap(f, cap);
    const Tables t(f);
    return to_sets(enumerate_masks(sem, t), f.size());
}

ExtensionSet oracle_enumerate(Semantics sem, const Framework& f, std::size_t cap) {
    return f.to_extensions(oracle_enumerate_sets(sem, f, cap));
}

ExtensionSet oracle_conflict_free(const Framework& f, std::size_t cap) {
    check_cap(f, cap);
    return family_to_extensions(f, Tables(f).cf);
}

ExtensionSet oracle_admissible(const Framework& f, std::size_t cap) {
    check_cap(f, cap);
    return family_to_extensions(f, Tables(f).admissible);
}

}  // namespace afkit
