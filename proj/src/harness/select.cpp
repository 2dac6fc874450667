#include "afkit/harness/select.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "afkit/core/errors.hpp"
#include "afkit/core/predicates.hpp"

namespace afkit {
namespace {

// Alternatives tried per slot when rebalancing; keeps engine calls bounded.
constexpr std::size_t kSwapTries = 64;

}  // namespace

SelectionQuota SelectionQuota::for_group(TaskGroup g) {
    SelectionQuota q;
    q.counts = {{HardnessCategory::VeryEasy, 50},
                {HardnessCategory::Easy, 50},
                {HardnessCategory::Medium, 100},
                {HardnessCategory::Hard, 100},
                {HardnessCategory::TooHard, 50}};
    if (g == TaskGroup::C) {
        q.counts[HardnessCategory::Hard] = 150;
        q.counts[HardnessCategory::TooHard] = 0;
    }
    return q;
}

std::size_t SelectionQuota::total() const {
    std::size_t t = 0;
    for (const auto& [c, n] : counts) t += n;
    return t;
}

std::vector<std::vector<std::string>> select_benchmarks(std::vector<std::vector<std::string>> pools, std::size_t n,
                                                        SeededRng& rng) {
    std::size_t available = 0;
    for (const auto& p : pools) available += p.size();
    if (available < n)
        throw InsufficientPool("need " + std::to_string(n) + " instances, pools hold " + std::to_string(available));

    std::vector<std::vector<std::string>> picked(pools.size());
    std::size_t remaining = n;
    while (remaining > 0) {
        std::vector<std::size_t> open;
        for (std::size_t d = 0; d < pools.size(); ++d)
            if (!pools[d].empty()) open.push_back(d);
        if (open.size() > remaining) {
            rng.shuffle(open);
            open.resize(remaining);
            std::sort(open.begin(), open.end());
        }
        for (auto d : open) {
            auto& pool = pools[d];
            const auto k = rng.below(pool.size());
            picked[d].push_back(std::move(pool[k]));
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
        }
        remaining -= open.size();
    }
    return picked;
}

std::vector<ClassifiedInstance> select_for_quota(const std::vector<ClassifiedInstance>& instances,
                                                 const SelectionQuota& quota, SeededRng& rng, bool allow_short) {
    std::vector<ClassifiedInstance> out;
    for (auto category : kSelectableCategories) {
        const auto it = quota.counts.find(category);
        const std::size_t want = it == quota.counts.end() ? 0 : it->second;
        if (want == 0) continue;
        std::map<std::string, std::vector<std::string>> by_domain;
        for (const auto& inst : instances)
            if (inst.category == category) by_domain[inst.domain].push_back(inst.id);
        std::vector<std::string> domains;
        std::vector<std::vector<std::string>> pools;
        std::size_t available = 0;
        for (auto& [d, ids] : by_domain) {
            domains.push_back(d);
            available += ids.size();
            pools.push_back(std::move(ids));
        }
        const auto n = allow_short ? std::min(want, available) : want;
        const auto picked = select_benchmarks(std::move(pools), n, rng);
        for (std::size_t d = 0; d < picked.size(); ++d)
            for (const auto& id : picked[d]) out.push_back({id, domains[d], category});
    }
    return out;
}

std::size_t query_count(HardnessCategory c) noexcept {
    switch (c) {
        case HardnessCategory::VeryEasy:
        case HardnessCategory::NotClassified: return 0;
        case HardnessCategory::TooHard: return 2;
        default: return 1;
    }
}

std::vector<ArgumentId> select_arguments(const Framework& f, HardnessCategory c, SeededRng& rng) {
    const auto k = std::min(query_count(c), f.size());
    std::vector<std::size_t> idx(f.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    // Partial Fisher-Yates over the first k slots.
    std::vector<ArgumentId> out;
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + rng.below(idx.size() - i);
        std::swap(idx[i], idx[j]);
        out.push_back(f.name(idx[i]));
    }
    return out;
}

QuerySelection select_queries(const std::vector<QueryInstance>& instances, const TaskSpec& task,
                              const QueryOptions& options, SeededRng& rng) {
    struct Slot {
        std::size_t instance;
        ArgumentId arg;
        std::optional<bool> yes;
    };
    std::map<std::pair<std::size_t, ArgumentId>, std::optional<bool>> cache;
    auto answer = [&](std::size_t i, const ArgumentId& a) -> std::optional<bool> {
        const auto key = std::make_pair(i, a);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        std::optional<bool> v;
        try {
            auto t = task;
            t.query = a;
            v = std::get<Verdict>(solve_optimized(t, *instances[i].framework, EngineOptions{options.node_budget})).yes;
        } catch (const BudgetExceeded&) {
        }
        cache[key] = v;
        return v;
    };

    std::vector<Slot> slots;
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (auto& a : select_arguments(*instances[i].framework, instances[i].category, rng))
            slots.push_back({i, a, answer(i, a)});

    auto count = [&](bool want) {
        return static_cast<std::size_t>(
            std::count_if(slots.begin(), slots.end(), [&](const Slot& s) { return s.yes == want; }));
    };
    const auto total = slots.size();
    const auto need_yes = static_cast<std::size_t>(std::ceil(options.min_yes_fraction * static_cast<double>(total)));
    const auto need_no = static_cast<std::size_t>(std::ceil(options.min_no_fraction * static_cast<double>(total)));

    // Moves slots answering !want over to want while the other side keeps its
    // minimum.
    auto rebalance = [&](bool want, std::size_t need, std::size_t keep) {
        std::vector<std::size_t> order(slots.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(order);
        for (auto s : order) {
            if (count(want) >= need) return;
            auto& slot = slots[s];
            if (slot.yes == !want && count(!want) <= keep) continue;
            if (slot.yes == want) continue;
            const auto& f = *instances[slot.instance].framework;
            std::set<ArgumentId> taken;
            for (const auto& other : slots)
                if (other.instance == slot.instance) taken.insert(other.arg);
            std::vector<std::size_t> candidates(f.size());
            std::iota(candidates.begin(), candidates.end(), std::size_t{0});
            rng.shuffle(candidates);
            std::size_t tries = 0;
            for (auto c : candidates) {
                if (tries++ >= kSwapTries) break;
                if (taken.count(f.name(c))) continue;
                const auto v = answer(slot.instance, f.name(c));
                if (v == want) {
                    slot.arg = f.name(c);
                    slot.yes = v;
                    break;
                }
            }
        }
    };
    rebalance(true, need_yes, need_no);
    rebalance(false, need_no, need_yes);

    QuerySelection out;
    for (const auto& inst : instances) out.arguments[inst.id];
    for (const auto& s : slots) {
        out.arguments[instances[s.instance].id].push_back(s.arg);
        if (!s.yes) ++out.unknown;
        else if (*s.yes) ++out.yes;
        else ++out.no;
    }
    out.balanced = out.yes >= need_yes && out.no >= need_no;
    return out;
}

IdealChoice select_ideal_argument(const Framework& f, const ArgSet& grounded, const ArgSet& skeptical_pr,
                                  SeededRng& rng) {
    if (f.size() == 0) throw InvalidFramework("cannot select an argument from an empty framework");
    const double alpha = rng.uniform();
    const double beta = rng.uniform();
    auto draw = [&](const ArgSet& s, int branch) { return IdealChoice{f.name(rng.pick(s.members())), branch}; };

    const auto interesting = skeptical_pr - grounded;
    if (!interesting.empty() && alpha < 0.9) return draw(interesting, 1);
    if (!grounded.empty() && beta < 0.6) return draw(grounded, 2);
    const auto rest = f.all() - skeptical_pr;
    if (!rest.empty()) return draw(rest, 3);
    return draw(f.all(), 0);
}

IdealChoice select_ideal_argument(const Framework& f, SeededRng& rng, const EngineOptions& opts) {
    auto skeptical = f.all();
    for (const auto& e : enumerate(Semantics::PR, f, opts)) skeptical &= f.to_set(e);
    return select_ideal_argument(f, grounded(f), skeptical, rng);
}

std::map<HardnessCategory, StableExistence> stable_existence_report(const std::vector<QueryInstance>& selection,
                                                                    std::optional<std::uint64_t> node_budget) {
    std::map<HardnessCategory, StableExistence> out;
    for (const auto& inst : selection) {
        auto& row = out[inst.category];
        try {
            const auto ans = solve_optimized(TaskSpec::se(Semantics::ST), *inst.framework, EngineOptions{node_budget});
            if (std::get<SingleExtension>(ans).extension) ++row.nonempty;
            else ++row.empty;
        } catch (const BudgetExceeded&) {
            ++row.unknown;
        }
    }
    return out;
}

}  // namespace afkit
