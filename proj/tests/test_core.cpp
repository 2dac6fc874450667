#include <random>

#include "afkit/core/errors.hpp"
#include "afkit/core/predicates.hpp"
#include "afkit/core/verify.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace afkit;
using fixtures::sample_af;

TEST_CASE("framework rejects malformed input") {
    CHECK_THROWS_AS(Framework({"a", "a"}, {}), InvalidFramework);
    CHECK_THROWS_AS(Framework({""}, {}), InvalidFramework);
    CHECK_THROWS_AS(Framework({"a"}, {{"a", "z"}}), UnknownArgument);
}

TEST_CASE("duplicate attacks collapse and self-attacks are kept") {
    Framework f({"a", "b"}, {{"a", "b"}, {"a", "b"}, {"b", "b"}});
    CHECK(f.attack_count() == 2);
    CHECK(f.attacks(1, 1));
    CHECK(f.attackers(1).size() == 2);
}

TEST_CASE("framework equality ignores declaration order") {
    Framework a({"x", "y"}, {{"x", "y"}});
    Framework b({"y", "x"}, {{"x", "y"}});
    Framework c({"y", "x"}, {{"y", "x"}});
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("ids are case-sensitive and extensions sort lexicographically") {
    Framework f({"a", "A"}, {});
    CHECK(f.size() == 2);
    Extension e{"b", "a", "B", "a"};
    CHECK(e.members() == std::vector<std::string>{"B", "a", "b"});
    CHECK(Extension{"a"} < Extension{"a", "b"});
    CHECK(Extension{} < Extension{"a"});
}

TEST_CASE("conflict-freeness on the sample framework") {
    const auto f = sample_af();
    CHECK(is_conflict_free(f, Extension{"a", "c", "h"}));
    CHECK_FALSE(is_conflict_free(f, Extension{"f"}));
    CHECK(is_conflict_free(f, Extension{}));
    CHECK_THROWS_AS(is_conflict_free(f, Extension{"zz"}), UnknownArgument);
}

TEST_CASE("defense") {
    const auto f = sample_af();
    CHECK_FALSE(defends(f, Extension{"a", "d"}, "d"));
    CHECK(defends(f, Extension{}, "h") == false);
    Framework single({"a"}, {});
    CHECK(defends(single, Extension{}, "a"));
    CHECK(defends(fixtures::chain3(), Extension{"a"}, "c"));
    CHECK_THROWS_AS(defends(f, Extension{}, "nope"), UnknownArgument);
}

TEST_CASE("range") {
    const auto f = sample_af();
    CHECK(range_of(f, Extension{"b", "d", "h"}) == Extension{"a", "b", "c", "d", "e", "g", "h"});
    CHECK(range_of(f, Extension{}) == Extension{});
    CHECK(range_of(f, Extension{"f"}) == Extension{"f"});
}

TEST_CASE("grounded extension") {
    CHECK(grounded_extension(sample_af()) == Extension{});
    CHECK(grounded_extension(Framework({"a"}, {})) == Extension{"a"});
    CHECK(grounded_extension(fixtures::chain3()) == Extension{"a", "c"});
    CHECK(grounded_extension(Framework()) == Extension{});
}

TEST_CASE("verify on the sample framework") {
    const auto f = sample_af();
    CHECK_FALSE(verify(Semantics::CO, f, Extension{"b", "d"}));
    CHECK(verify(Semantics::CO, f, Extension{"b", "d", "h"}));
    CHECK(verify(Semantics::ID, f, Extension{"h"}));
    CHECK_FALSE(verify(Semantics::ID, f, Extension{}));
    CHECK(verify(Semantics::ST, Framework({"a"}, {}), Extension{"a"}));
    CHECK(verify(Semantics::PR, f, Extension{"a", "h"}));
    CHECK_FALSE(verify(Semantics::PR, f, Extension{"h"}));
    CHECK(verify(Semantics::SST, f, Extension{"b", "d", "h"}));
    CHECK_FALSE(verify(Semantics::SST, f, Extension{"a", "h"}));
    CHECK(verify(Semantics::STG, f, Extension{"a", "e", "h"}));
    CHECK_FALSE(verify(Semantics::STG, f, Extension{"a", "h"}));
    CHECK(verify(Semantics::GR, f, Extension{}));
    CHECK_FALSE(verify(Semantics::GR, f, Extension{"h"}));
    CHECK_THROWS_AS(verify(Semantics::CO, f, Extension{"q"}), UnknownArgument);
}

TEST_CASE("verify agrees with the naive oracle on random frameworks") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto f = fixtures::random_af(seed, 3 + seed % 6, 0.15 + 0.05 * static_cast<double>(seed % 5));
        const fixtures::NaiveOracle oracle(f);
        const auto cf = oracle.conflict_free();
        for (auto sem : kAllSemantics) {
            const auto expected = oracle.enumerate(sem);
            for (const auto& s : cf) {
                const bool member = std::binary_search(expected.begin(), expected.end(), s);
                CAPTURE(seed);
                CAPTURE(to_string(sem));
                CHECK(verify(sem, f, s) == member);
            }
        }
    }
}

TEST_CASE("core properties on random frameworks") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto f = fixtures::random_af(seed + 1000, 8, 0.2);
        const fixtures::NaiveOracle oracle(f);
        const ArgSet g = grounded(f);
        for (const auto& co : oracle.enumerate(Semantics::CO)) CHECK(g.is_subset_of(f.to_set(co)));
        const auto st = oracle.enumerate(Semantics::ST);
        for (const auto& s : st) {
            CHECK(verify(Semantics::SST, f, s));
            CHECK(verify(Semantics::STG, f, s));
        }
        std::mt19937_64 rng(seed);
        for (int k = 0; k < 20; ++k) {
            ArgSet s(f.size()), t(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (rng() % 2) s.insert(i);
                if (rng() % 2) t.insert(i);
            }
            t |= s;
            CHECK(range_of(f, s).is_subset_of(range_of(f, t)));
            if (verify(Semantics::PR, f, s)) CHECK(verify(Semantics::CO, f, s));
            if (verify(Semantics::CO, f, s)) CHECK(is_conflict_free(f, s));
        }
    }
}

TEST_CASE("verify respects a node budget") {
    const auto f = sample_af();
    CHECK_THROWS_AS(verify(Semantics::PR, f, Extension{"h"}, 0), BudgetExceeded);
}
