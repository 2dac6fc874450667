#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "afkit/core/framework.hpp"
#include "afkit/engine/engine.hpp"
#include "afkit/gen/rng.hpp"
#include "afkit/harness/classify.hpp"

namespace afkit {

/// Instances to draw per hardness category.
struct SelectionQuota {
    std::map<HardnessCategory, std::size_t> counts;

    /// 50/50/100/100/50; group C takes 150 hard and no too-hard instances.
    static SelectionQuota for_group(TaskGroup g);
    std::size_t total() const;
};

/// Round robin over the non-empty pools, one random pick per pool per round.
/// When fewer picks remain than non-empty pools, the pools of the last round
/// are drawn at random. Returns the picks per pool, in pick order.
/// Throws InsufficientPool when the pools hold fewer than n items.
std::vector<std::vector<std::string>> select_benchmarks(std::vector<std::vector<std::string>> pools, std::size_t n,
                                                        SeededRng& rng);

struct ClassifiedInstance {
    std::string id;
    std::string domain;
    HardnessCategory category = HardnessCategory::NotClassified;
};

/// Applies a quota category by category, with pools per domain in domain
/// name order. With `allow_short`, a category whose pools run dry yields what
/// it has instead of throwing InsufficientPool.
std::vector<ClassifiedInstance> select_for_quota(const std::vector<ClassifiedInstance>& instances,
                                                 const SelectionQuota& quota, SeededRng& rng,
                                                 bool allow_short = false);

/// 0 for very easy (and unclassified), 2 for too hard, 1 otherwise.
std::size_t query_count(HardnessCategory c) noexcept;

/// Distinct arguments drawn uniformly, query_count(c) of them (fewer when the
/// framework is smaller).
std::vector<ArgumentId> select_arguments(const Framework& f, HardnessCategory c, SeededRng& rng);

struct QueryOptions {
    /// Minimum share of yes- and of no-questions per task.
    double min_yes_fraction = 0.2;
    double min_no_fraction = 0.2;
    /// Per engine call; questions the engine cannot settle count as unknown.
    std::optional<std::uint64_t> node_budget = 2'000'000;
};

struct QueryInstance {
    std::string id;
    const Framework* framework = nullptr;
    HardnessCategory category = HardnessCategory::NotClassified;
};

struct QuerySelection {
    /// Query arguments per instance id.
    std::map<std::string, std::vector<ArgumentId>> arguments;
    std::size_t yes = 0;
    std::size_t no = 0;
    std::size_t unknown = 0;
    /// Both minimums met.
    bool balanced = false;
};

/// Random arguments per instance, then swaps individual picks until the yes-
/// and no-shares for `task` reach their minimums or no swap can help.
QuerySelection select_queries(const std::vector<QueryInstance>& instances, const TaskSpec& task,
                              const QueryOptions& options, SeededRng& rng);

/// Which rule chose the argument: 1 (in every preferred extension but not
/// grounded), 2 (grounded), 3 (outside some preferred extension), or 0 when
/// the chosen pool was empty and the argument was drawn from all arguments.
struct IdealChoice {
    ArgumentId argument;
    int branch = 0;
};

/// Draws alpha then beta on every call and applies the three rules with
/// thresholds 0.9 and 0.6. Throws InvalidFramework on an empty framework and
/// BudgetExceeded when the preferred extensions are out of reach.
IdealChoice select_ideal_argument(const Framework& f, SeededRng& rng, const EngineOptions& opts = {});

/// Same rule with G and the intersection of all preferred extensions given.
IdealChoice select_ideal_argument(const Framework& f, const ArgSet& grounded, const ArgSet& skeptical_pr,
                                  SeededRng& rng);

struct StableExistence {
    std::size_t nonempty = 0;
    std::size_t empty = 0;
    std::size_t unknown = 0;
};

/// Runs SE-ST under `node_budget` per instance and tallies the outcome per
/// category.
std::map<HardnessCategory, StableExistence> stable_existence_report(const std::vector<QueryInstance>& selection,
                                                                    std::optional<std::uint64_t> node_budget);

}  // namespace afkit
