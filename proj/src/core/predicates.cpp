#include "afkit/core/predicates.hpp"

#include <string>

#include "afkit/core/semantics.hpp"

namespace afkit {

std::string_view to_string(Semantics s) noexcept {
    switch (s) {
        case Semantics::CO: return "CO";
        case Semantics::PR: return "PR";
        case Semantics::ST: return "ST";
        case Semantics::SST: return "SST";
        case Semantics::STG: return "STG";
        case Semantics::GR: return "GR";
        case Semantics::ID: return "ID";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) noexcept {
    for (auto s : kAllSemantics)
        if (to_string(s) == text) return s;
    return std::nullopt;
}

bool is_conflict_free(const Framework& f, const ArgSet& s) {
    bool ok = true;
    s.for_each([&](std::size_t a) {
        if (!ok) return;
        for (auto t : f.targets(a))
            if (s.contains(t)) {
                ok = false;
                return;
            }
    });
    return ok;
}

bool defends(const Framework& f, const ArgSet& s, std::size_t a) {
    for (auto b : f.attackers(a)) {
        bool countered = false;
        for (auto c : f.attackers(b))
            if (s.contains(c)) {
                countered = true;
                break;
            }
        if (!countered) return false;
    }
    return true;
}

ArgSet attacked_by(const Framework& f, const ArgSet& s) {
    ArgSet out(f.size());
    s.for_each([&](std::size_t a) {
        for (auto t : f.targets(a)) out.insert(t);
    });
    return out;
}

ArgSet range_of(const Framework& f, const ArgSet& s) { return s | attacked_by(f, s); }

ArgSet defended_by(const Framework& f, const ArgSet& s) {
    // a is defended iff none of its attackers lies outside the set s attacks.
    const ArgSet hit = attacked_by(f, s);
    ArgSet out(f.size());
    for (std::size_t a = 0; a < f.size(); ++a) {
        bool ok = true;
        for (auto b : f.attackers(a))
            if (!hit.contains(b)) {
                ok = false;
                break;
            }
        if (ok) out.insert(a);
    }
    return out;
}

bool is_admissible(const Framework& f, const ArgSet& s) {
    return is_conflict_free(f, s) && s.is_subset_of(defended_by(f, s));
}

bool is_complete(const Framework& f, const ArgSet& s) {
    return is_conflict_free(f, s) && defended_by(f, s) == s;
}

bool is_stable(const Framework& f, const ArgSet& s) {
    return is_conflict_free(f, s) && range_of(f, s).count() == f.size();
}

ArgSet grounded(const Framework& f) {
    // Incremental form of iterating defended_by from the empty set: an argument
    // joins once all of its attackers are attacked by the current set.
    const std::size_t n = f.size();
    ArgSet in(n);
    std::vector<char> out(n, 0);
    std::vector<std::size_t> live_attackers(n);
    std::vector<std::size_t> queue;
    for (std::size_t a = 0; a < n; ++a) {
        live_attackers[a] = f.attackers(a).size();
        if (live_attackers[a] == 0) queue.push_back(a);
    }
    while (!queue.empty()) {
        const std::size_t a = queue.back();
        queue.pop_back();
        in.insert(a);
        for (auto t : f.targets(a)) {
            if (out[t]) continue;
            out[t] = 1;
            for (auto u : f.targets(t))
                if (--live_attackers[u] == 0) queue.push_back(u);
        }
    }
    return in;
}

ArgSet largest_admissible_subset(const Framework& f, ArgSet s) {
    for (;;) {
        const ArgSet hit = attacked_by(f, s);
        ArgSet next(f.size());
        s.for_each([&](std::size_t a) {
            for (auto b : f.attackers(a))
                if (!hit.contains(b)) return;
            next.insert(a);
        });
        if (next == s) return s;
        s = std::move(next);
    }
}

bool is_conflict_free(const Framework& f, const Extension& s) { return is_conflict_free(f, f.to_set(s)); }

bool defends(const Framework& f, const Extension& s, std::string_view a) {
    return defends(f, f.to_set(s), f.index(a));
}

Extension range_of(const Framework& f, const Extension& s) { return f.to_extension(range_of(f, f.to_set(s))); }

Extension grounded_extension(const Framework& f) { return f.to_extension(grounded(f)); }

}  // namespace afkit
