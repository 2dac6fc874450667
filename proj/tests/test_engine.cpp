#include "afkit/core/errors.hpp"
#include "afkit/core/predicates.hpp"
#include "afkit/engine/engine.hpp"
#include "afkit/engine/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace afkit;
using fixtures::sample_af;

namespace {

ExtensionSet ee(const Answer& a) { return std::get<Enumeration>(a).extensions; }

const ExtensionSet kCO = {Extension{}, Extension{"a"}, Extension{"a", "h"}, Extension{"b", "d", "h"}, Extension{"h"}};
const ExtensionSet kPR = {Extension{"a", "h"}, Extension{"b", "d", "h"}};
const ExtensionSet kSST = {Extension{"b", "d", "h"}};
const ExtensionSet kSTG = {Extension{"a", "e", "h"}, Extension{"b", "d", "h"}, Extension{"b", "e", "h"}};

}  // namespace

TEST_CASE("task names and shapes") {
    CHECK(all_task_names().size() == 25);
    CHECK(all_task_names().front() == "DC-CO");
    CHECK(all_task_names().back() == "D3");
    CHECK(parse_task_name("EE-SST") == TaskSpec::ee(Semantics::SST));
    CHECK_FALSE(parse_task_name("DS-GR"));
    CHECK_FALSE(parse_task_name("EE-ID"));
    CHECK_FALSE(parse_task_name("XX-CO"));
    CHECK_THROWS_AS((TaskSpec{Problem::DC, Semantics::CO, std::nullopt}).validate(), MalformedTask);
    CHECK_THROWS_AS((TaskSpec{Problem::SE, Semantics::CO, "a"}).validate(), MalformedTask);
    CHECK_THROWS_AS((TaskSpec{Problem::DS, Semantics::GR, "a"}).validate(), MalformedTask);
    CHECK_NOTHROW((TaskSpec{Problem::DS, Semantics::GR, "a"}).name());
    CHECK(shape_matches(Problem::D3, D3Triple{}));
    CHECK_FALSE(shape_matches(Problem::EE, Verdict{}));
}

TEST_CASE("oracle on the sample framework") {
    const auto f = sample_af();
    CHECK(oracle_enumerate(Semantics::CO, f) == kCO);
    CHECK(oracle_enumerate(Semantics::PR, f) == kPR);
    CHECK(oracle_enumerate(Semantics::ST, f).empty());
    CHECK(oracle_enumerate(Semantics::SST, f) == kSST);
    CHECK(oracle_enumerate(Semantics::STG, f) == kSTG);
    CHECK(oracle_enumerate(Semantics::GR, f) == ExtensionSet{Extension{}});
    CHECK(oracle_enumerate(Semantics::ID, f) == ExtensionSet{Extension{"h"}});
    CHECK(oracle_conflict_free(f).size() == 22);
    CHECK(oracle_admissible(f) == fixtures::sorted({Extension{}, Extension{"a"}, Extension{"b"}, Extension{"h"},
                                                    Extension{"a", "h"}, Extension{"b", "d"}, Extension{"b", "h"},
                                                    Extension{"b", "d", "h"}}));
    CHECK(oracle_enumerate(Semantics::ST, Framework({"a"}, {{"a", "a"}})).empty());
}

TEST_CASE("oracle cap") {
    const auto f = fixtures::random_af(1, 21, 0.1);
    CHECK_THROWS_AS(oracle_enumerate(Semantics::CO, f), OracleCapExceeded);
    CHECK_THROWS_AS(oracle_enumerate(Semantics::CO, sample_af(), 7), OracleCapExceeded);
    CHECK_THROWS_AS(oracle_enumerate(Semantics::CO, sample_af(), kMaxOracleCap + 1), OracleCapExceeded);
    CHECK_NOTHROW(oracle_enumerate(Semantics::CO, f, 21));
}

TEST_CASE("oracle agrees with the naive definitions") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto f = fixtures::random_af(seed, seed % 10, 0.1 + 0.04 * static_cast<double>(seed % 8));
        const fixtures::NaiveOracle naive(f);
        CHECK(oracle_conflict_free(f) == naive.conflict_free());
        CHECK(oracle_admissible(f) == naive.admissible_sets());
        for (auto sem : kAllSemantics) {
            CAPTURE(seed);
            CAPTURE(to_string(sem));
            CHECK(oracle_enumerate(sem, f) == naive.enumerate(sem));
        }
    }
}

TEST_CASE("solve on the sample framework") {
    const auto f = sample_af();
    for (int backend = 0; backend < 2; ++backend) {
        auto run = [&](const TaskSpec& t) { return backend ? solve_optimized(t, f) : solve(t, f); };
        CHECK(std::get<SingleExtension>(run(TaskSpec::se(Semantics::ST))).extension == std::nullopt);
        CHECK(std::get<Verdict>(run(TaskSpec::ds(Semantics::ST, "f"))).yes);
        CHECK_FALSE(std::get<Verdict>(run(TaskSpec::dc(Semantics::PR, "e"))).yes);
        CHECK(std::get<Verdict>(run(TaskSpec::dc(Semantics::PR, "d"))).yes);
        CHECK(std::get<Verdict>(run(TaskSpec::ds(Semantics::PR, "h"))).yes);
        CHECK_FALSE(std::get<Verdict>(run(TaskSpec::ds(Semantics::CO, "h"))).yes);
        CHECK(std::get<Verdict>(run(TaskSpec::dc(Semantics::ID, "h"))).yes);
        CHECK(std::get<Verdict>(run(TaskSpec::dc(Semantics::STG, "e"))).yes);
        CHECK_FALSE(std::get<Verdict>(run(TaskSpec::ds(Semantics::STG, "e"))).yes);
        CHECK(ee(run(TaskSpec::ee(Semantics::CO))) == kCO);
        CHECK(ee(run(TaskSpec::ee(Semantics::SST))) == kSST);
        CHECK(ee(run(TaskSpec::ee(Semantics::STG))) == kSTG);
        const auto triple = std::get<D3Triple>(run(TaskSpec::d3()));
        CHECK(triple.grounded == ExtensionSet{Extension{}});
        CHECK(triple.stable.empty());
        CHECK(triple.preferred == kPR);
        CHECK_THROWS_AS(run(TaskSpec::dc(Semantics::CO, "zz")), UnknownArgument);
        CHECK_THROWS_AS(run(TaskSpec{Problem::EE, Semantics::ID, std::nullopt}), MalformedTask);
    }
    CHECK(std::get<SingleExtension>(solve(TaskSpec::se(Semantics::PR), f)).extension == Extension{"a", "h"});
}

TEST_CASE("trivial frameworks") {
    const Framework empty;
    CHECK(ee(solve_optimized(TaskSpec::ee(Semantics::PR), empty)) == ExtensionSet{Extension{}});
    CHECK(ee(solve_optimized(TaskSpec::ee(Semantics::ST), empty)) == ExtensionSet{Extension{}});
    const Framework single({"a"}, {});
    const auto t = d3(single);
    CHECK(t.grounded == ExtensionSet{Extension{"a"}});
    CHECK(t.stable == ExtensionSet{Extension{"a"}});
    CHECK(t.preferred == ExtensionSet{Extension{"a"}});
    const Framework loop({"a"}, {{"a", "a"}});
    CHECK(enumerate(Semantics::ST, loop).empty());
    CHECK(enumerate(Semantics::STG, loop) == ExtensionSet{Extension{}});
}

TEST_CASE("optimized engine matches the oracle on every task") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = 1 + seed % 10;
        const auto f = fixtures::random_af(seed * 7919 + 3, n, 0.08 + 0.03 * static_cast<double>(seed % 9));
        for (const auto& name : all_task_names()) {
            auto task = *parse_task_name(name);
            std::vector<std::optional<ArgumentId>> queries{std::nullopt};
            if (needs_query(task.problem)) {
                queries.clear();
                for (const auto& a : f.names()) queries.emplace_back(a);
            }
            for (const auto& q : queries) {
                task.query = q;
                const Answer expected = solve(task, f);
                const Answer got = solve_optimized(task, f);
                CAPTURE(seed);
                CAPTURE(task.name());
                if (task.problem == Problem::SE) {
                    // Any valid witness is acceptable; NO must agree.
                    const auto& e = std::get<SingleExtension>(expected).extension;
                    const auto& g = std::get<SingleExtension>(got).extension;
                    CHECK(e.has_value() == g.has_value());
                    if (g) {
                        const auto all = oracle_enumerate(*task.semantics, f);
                        CHECK(std::binary_search(all.begin(), all.end(), *g));
                    }
                } else {
                    CHECK(expected == got);
                }
                ++checked;
            }
        }
    }
    CHECK(checked > 10000);
}

TEST_CASE("engine invariants on random frameworks") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto f = fixtures::random_af(seed + 77, 9, 0.18);
        const auto gr = enumerate(Semantics::GR, f);
        const auto id = enumerate(Semantics::ID, f);
        const auto pr = enumerate(Semantics::PR, f);
        REQUIRE(gr.size() == 1);
        REQUIRE(id.size() == 1);
        for (auto sem : kAllSemantics)
            if (sem != Semantics::ST) CHECK_FALSE(enumerate(sem, f).empty());
        const auto st = enumerate(Semantics::ST, f);
        if (!st.empty()) {
            CHECK(st == enumerate(Semantics::SST, f));
            CHECK(st == enumerate(Semantics::STG, f));
        }
        const ArgSet g = f.to_set(gr.front());
        const ArgSet i = f.to_set(id.front());
        CHECK(g.is_subset_of(i));
        for (const auto& p : pr) CHECK(i.is_subset_of(f.to_set(p)));
        for (const auto& a : f.names()) {
            CHECK(solve_optimized(TaskSpec::ds(Semantics::CO, a), f) == solve_optimized(TaskSpec::dc(Semantics::GR, a), f));
            CHECK(solve_optimized(TaskSpec::dc(Semantics::PR, a), f) == solve_optimized(TaskSpec::dc(Semantics::CO, a), f));
        }
    }
}

TEST_CASE("node budget surfaces as an error, never as NO") {
    const auto f = fixtures::random_af(5, 10, 0.2);
    EngineOptions tight;
    tight.node_budget = 1;
    CHECK_THROWS_AS(solve_optimized(TaskSpec::ee(Semantics::PR), f, tight), BudgetExceeded);
    EngineOptions roomy;
    roomy.node_budget = 1'000'000;
    CHECK_NOTHROW(solve_optimized(TaskSpec::ee(Semantics::PR), f, roomy));
}

TEST_CASE("large frameworks are solved without the oracle") {
    // Long chain: grounded labelling settles everything by propagation.
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> attacks;
    const std::size_t n = 200000;
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) attacks.emplace_back(names[i], names[i + 1]);
    const Framework f(names, attacks);
    const auto pr = enumerate(Semantics::PR, f);
    REQUIRE(pr.size() == 1);
    CHECK(pr.front().size() == n / 2);
    CHECK(std::get<Verdict>(solve_optimized(TaskSpec::ds(Semantics::ST, "c0"), f)).yes);
}
