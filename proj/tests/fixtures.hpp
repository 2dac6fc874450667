#pragma once

// Shared test fixtures: an eight-argument sample framework, a naive
// definition-level oracle independent of the library, and seeded random AFs.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "afkit/core/framework.hpp"
#include "afkit/core/semantics.hpp"

namespace fixtures {

using afkit::Extension;
using afkit::ExtensionSet;
using afkit::Framework;
using afkit::Semantics;

inline Framework sample_af() {
    return Framework({"a", "b", "c", "d", "e", "f", "g", "h"},
                     {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"d", "g"}, {"e", "c"},
                      {"e", "f"}, {"f", "f"}, {"g", "g"}, {"g", "h"}, {"h", "g"}});
}

inline Framework chain3() { return Framework({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

inline ExtensionSet sorted(ExtensionSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

/// Direct transcription of the definitions over an attack matrix; quadratic
/// in the number of subsets, so keep n small (<= 10).
class NaiveOracle {
public:
    explicit NaiveOracle(const Framework& f) : f_(f), n_(f.size()), att_(n_ * n_, 0) {
        for (const auto& [a, b] : f.attack_list()) att_[a * n_ + b] = 1;
        const std::uint32_t subsets = 1U << n_;
        for (std::uint32_t s = 0; s < subsets; ++s) {
            if (!cf(s)) continue;
            cf_.push_back(s);
            if (admissible(s)) adm_.push_back(s);
            if (complete(s)) co_.push_back(s);
        }
    }

    ExtensionSet conflict_free() const { return names(cf_); }
    ExtensionSet admissible_sets() const { return names(adm_); }

    ExtensionSet enumerate(Semantics sem) const { return names(masks(sem)); }

    std::vector<std::uint32_t> masks(Semantics sem) const {
        std::vector<std::uint32_t> out;
        switch (sem) {
            case Semantics::CO: return co_;
            case Semantics::PR:
                for (auto s : co_)
                    if (!dominated(s, co_, [](std::uint32_t x) { return x; }, *this)) out.push_back(s);
                return out;
            case Semantics::ST:
                for (auto s : co_)
                    if (range(s) == full()) out.push_back(s);
                return out;
            case Semantics::SST:
                for (auto s : co_)
                    if (!dominated(s, co_, [this](std::uint32_t x) { return range(x); }, *this)) out.push_back(s);
                return out;
            case Semantics::STG:
                for (auto s : cf_)
                    if (!dominated(s, cf_, [this](std::uint32_t x) { return range(x); }, *this)) out.push_back(s);
                return out;
            case Semantics::GR:
                for (auto s : co_) {
                    bool minimal = true;
                    for (auto t : co_)
                        if (t != s && (t & s) == t) minimal = false;
                    if (minimal) out.push_back(s);
                }
                return out;
            case Semantics::ID: {
                std::uint32_t common = full();
                for (auto p : masks(Semantics::PR)) common &= p;
                std::vector<std::uint32_t> inside;
                for (auto s : adm_)
                    if ((s & ~common) == 0) inside.push_back(s);
                for (auto s : inside) {
                    bool maximal = true;
                    for (auto t : inside)
                        if (t != s && (t & s) == s) maximal = false;
                    if (maximal) out.push_back(s);
                }
                return out;
            }
        }
        return out;
    }

private:
    template <class Key>
    static bool dominated(std::uint32_t s, const std::vector<std::uint32_t>& family, Key key, const NaiveOracle&) {
        const std::uint32_t ks = key(s);
        for (auto t : family) {
            const std::uint32_t kt = key(t);
            if (kt != ks && (kt & ks) == ks) return true;
        }
        return false;
    }

    std::uint32_t full() const { return n_ == 0 ? 0 : ((1U << n_) - 1); }
    bool in(std::uint32_t s, std::size_t i) const { return (s >> i) & 1U; }
    bool attacks(std::size_t a, std::size_t b) const { return att_[a * n_ + b] != 0; }

    bool cf(std::uint32_t s) const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (in(s, a) && in(s, b) && attacks(a, b)) return false;
        return true;
    }
    bool defends(std::uint32_t s, std::size_t a) const {
        for (std::size_t b = 0; b < n_; ++b) {
            if (!attacks(b, a)) continue;
            bool countered = false;
            for (std::size_t c = 0; c < n_; ++c)
                if (in(s, c) && attacks(c, b)) countered = true;
            if (!countered) return false;
        }
        return true;
    }
    bool admissible(std::uint32_t s) const {
        for (std::size_t a = 0; a < n_; ++a)
            if (in(s, a) && !defends(s, a)) return false;
        return true;
    }
    bool complete(std::uint32_t s) const {
        for (std::size_t a = 0; a < n_; ++a)
            if (in(s, a) != defends(s, a)) return false;
        return true;
    }
    std::uint32_t range(std::uint32_t s) const {
        std::uint32_t r = s;
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (in(s, a) && attacks(a, b)) r |= 1U << b;
        return r;
    }

    ExtensionSet names(const std::vector<std::uint32_t>& masks) const {
        ExtensionSet out;
        for (auto m : masks) {
            std::vector<std::string> ids;
            for (std::size_t i = 0; i < n_; ++i)
                if (in(m, i)) ids.push_back(f_.name(i));
            out.emplace_back(std::move(ids));
        }
        return sorted(std::move(out));
    }

    const Framework& f_;
    std::size_t n_;
    std::vector<char> att_;
    std::vector<std::uint32_t> cf_, adm_, co_;
};

/// Seeded random AF with n arguments and independent attack probability p
/// (self-attacks included).
inline Framework random_af(std::uint64_t seed, std::size_t n, double p) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> attacks;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (u(rng) < (i == j ? p / 4 : p)) attacks.emplace_back(names[i], names[j]);
    return Framework(names, attacks);
}

}  // namespace fixtures
