// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Tolerances and time limits are the constants below; none are adjusted to
// make a criterion pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "afkit/core/predicates.hpp"
#include "afkit/core/verify.hpp"
#include "afkit/engine/engine.hpp"
#include "afkit/gen/generators.hpp"
#include "afkit/harness/classify.hpp"
#include "afkit/harness/rank.hpp"
#include "afkit/harness/run.hpp"
#include "afkit/harness/select.hpp"
#include "afkit/io/formats.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;
using namespace afkit;

namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kEquivalenceSeconds = 600.0;
constexpr double kHarnessSeconds = 900.0;
constexpr std::size_t kCorpusSize = 500;
constexpr std::size_t kHarnessInstances = 50;
constexpr int kIdealDraws = 10000;
constexpr double kFirstBranchRate = 0.9, kFirstBranchTol = 0.01;
constexpr double kSecondBranchRate = 0.6, kSecondBranchTol = 0.015;

struct Result {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (notes.size() < 12) notes.push_back(what);
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string show(const ExtensionSet& s) {
    std::string out = "{";
    for (const auto& e : s) {
        out += out.size() > 1 ? ",{" : "{";
        for (std::size_t i = 0; i < e.members().size(); ++i) out += (i ? "," : "") + e.members()[i];
        out += "}";
    }
    return out + "}";
}

ExtensionSet sets(std::initializer_list<Extension> l) {
    ExtensionSet s(l);
    canonicalize(s);
    return s;
}

// The seeded corpus shared by criteria 2 and 3: half Erdos-Renyi, half Watts-Strogatz, |A| <= 10.
std::vector<Framework> small_corpus(std::size_t count) {
    std::vector<Framework> out;
    SeededRng rng(20170101);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = rng.between(1, 10);
        if (i % 2 == 0 || n < 5) {
            out.push_back(gen_erdos({n, rng.uniform()}, rng.next()));
        } else {
            const std::size_t k = n >= 7 && rng.bernoulli(0.5) ? 4 : 2;
            out.push_back(gen_watts({n, k, rng.uniform(), rng.uniform()}, rng.next()));
        }
    }
    return out;
}

const std::vector<Semantics> kMultiStatus = {Semantics::CO, Semantics::PR, Semantics::ST, Semantics::SST,
                                             Semantics::STG};

Result golden() {
    Result r;
    const auto t0 = Clock::now();
    const auto f = fixtures::sample_af();
    const std::map<Semantics, ExtensionSet> expected = {
        {Semantics::CO, sets({{}, {"a"}, {"h"}, {"a", "h"}, {"b", "d", "h"}})},
        {Semantics::PR, sets({{"a", "h"}, {"b", "d", "h"}})},
        {Semantics::ST, {}},
        {Semantics::SST, sets({{"b", "d", "h"}})},
        {Semantics::STG, sets({{"a", "e", "h"}, {"b", "e", "h"}, {"b", "d", "h"}})},
        {Semantics::GR, sets({{}})},
        {Semantics::ID, sets({{"h"}})},
    };
    for (const auto& [sem, want] : expected) {
        const auto got = enumerate(sem, f);
        r.require(got == want, std::string(to_string(sem)) + " = " + show(got));
        r.require(oracle_enumerate(sem, f) == want, std::string(to_string(sem)) + " (oracle) differs");
    }
    const auto cf = sets({{},         {"a"},      {"b"},      {"c"},      {"d"},           {"e"},
                          {"h"},      {"a", "c"}, {"a", "d"}, {"a", "e"}, {"a", "h"},      {"b", "d"},
                          {"b", "e"}, {"b", "h"}, {"c", "h"}, {"d", "h"}, {"e", "h"},      {"a", "c", "h"},
                          {"a", "d", "h"}, {"a", "e", "h"}, {"b", "d", "h"}, {"b", "e", "h"}});
    const auto adm = sets({{}, {"a"}, {"b"}, {"h"}, {"a", "h"}, {"b", "d"}, {"b", "h"}, {"b", "d", "h"}});
    r.require(cf.size() == 22 && oracle_conflict_free(f) == cf, "conflict-free sets = " + show(oracle_conflict_free(f)));
    r.require(oracle_admissible(f) == adm, "admissible sets = " + show(oracle_admissible(f)));
    const auto secs = seconds_since(t0);
    r.require(secs < kGoldenSeconds, "took " + std::to_string(secs) + " s");
    return r;
}

Result equivalence(const std::vector<Framework>& corpus) {
    Result r;
    const auto t0 = Clock::now();
    std::size_t questions = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& f = corpus[i];
        const auto tag = "AF #" + std::to_string(i) + " ";
        std::map<Semantics, ExtensionSet> ref;
        for (auto sem : kAllSemantics) {
            ref[sem] = oracle_enumerate(sem, f);
            r.require(enumerate(sem, f) == ref[sem], tag + std::string(to_string(sem)) + " enumeration");
        }
        for (const auto& name : all_task_names()) {
            const auto base = *parse_task_name(name);
            if (base.problem == Problem::D3) {
                const auto tri = std::get<D3Triple>(solve_optimized(base, f));
                r.require(tri.grounded == ref[Semantics::GR] && tri.stable == ref[Semantics::ST] &&
                              tri.preferred == ref[Semantics::PR],
                          tag + "D3");
                ++questions;
                continue;
            }
            const auto sem = *base.semantics;
            const auto& exts = ref[sem];
            switch (base.problem) {
                case Problem::DC:
                case Problem::DS:
                    for (const auto& a : f.names()) {
                        auto t = base;
                        t.query = a;
                        const bool want =
                            base.problem == Problem::DC
                                ? std::any_of(exts.begin(), exts.end(), [&](const Extension& e) { return e.contains(a); })
                                : std::all_of(exts.begin(), exts.end(), [&](const Extension& e) { return e.contains(a); });
                        r.require(std::get<Verdict>(solve_optimized(t, f)).yes == want, tag + name + " " + a);
                        ++questions;
                    }
                    break;
                case Problem::SE: {
                    const auto got = std::get<SingleExtension>(solve_optimized(base, f)).extension;
                    r.require(got ? std::binary_search(exts.begin(), exts.end(), *got) : exts.empty(), tag + name);
                    ++questions;
                    break;
                }
                case Problem::EE:
                    r.require(std::get<Enumeration>(solve_optimized(base, f)).extensions == exts, tag + name);
                    ++questions;
                    break;
                default:
                    break;
            }
        }
    }
    const auto secs = seconds_since(t0);
    r.require(secs < kEquivalenceSeconds, "took " + std::to_string(secs) + " s");
    r.notes.insert(r.notes.begin(), std::to_string(corpus.size()) + " AFs, " + std::to_string(questions) +
                                        " task questions, " + std::to_string(static_cast<int>(secs)) + " s");
    return r;
}

Result identities(const std::vector<Framework>& corpus) {
    Result r;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& f = corpus[i];
        const auto tag = "AF #" + std::to_string(i) + " ";
        std::map<Semantics, ExtensionSet> ext;
        for (auto sem : kAllSemantics) ext[sem] = enumerate(sem, f);
        for (const auto& a : f.names()) {
            auto ds_co = TaskSpec::ds(Semantics::CO, a), dc_gr = TaskSpec::dc(Semantics::GR, a);
            auto dc_pr = TaskSpec::dc(Semantics::PR, a), dc_co = TaskSpec::dc(Semantics::CO, a);
            r.require(std::get<Verdict>(solve_optimized(ds_co, f)).yes == std::get<Verdict>(solve_optimized(dc_gr, f)).yes,
                      tag + "DS-CO vs DC-GR on " + a);
            r.require(std::get<Verdict>(solve_optimized(dc_pr, f)).yes == std::get<Verdict>(solve_optimized(dc_co, f)).yes,
                      tag + "DC-PR vs DC-CO on " + a);
        }
        if (!ext[Semantics::ST].empty())
            r.require(ext[Semantics::ST] == ext[Semantics::SST] && ext[Semantics::ST] == ext[Semantics::STG],
                      tag + "ST, SST, STG differ");
        for (auto sem : kAllSemantics)
            if (sem != Semantics::ST) r.require(!ext[sem].empty(), tag + std::string(to_string(sem)) + " is empty");
        if (ext[Semantics::GR].size() != 1 || ext[Semantics::ID].size() != 1) continue;
        const auto gr = f.to_set(ext[Semantics::GR].front());
        const auto id = f.to_set(ext[Semantics::ID].front());
        auto skeptical = ArgSet::full(f.size());
        for (const auto& e : ext[Semantics::PR]) skeptical &= f.to_set(e);
        r.require(gr.is_subset_of(id), tag + "GR not within ID");
        r.require(id.is_subset_of(skeptical), tag + "ID not within the preferred intersection");
    }
    return r;
}

struct PublishedRow {
    std::string solver;
    long points;
    long correct;
    long wrong;
    double time;
};

// Per-track ranking tables as published, plus the three per-task results given in prose.
const std::vector<std::pair<std::string, std::vector<PublishedRow>>> kPublished = {
    {"CO",
     {{"pyglaf", 1229, 1229, 0, 28774.77},     {"cegartix", 1188, 1188, 0, 19846.86},
      {"argmat-sat", 1167, 1167, 0, 10472.57}, {"goDIAMOND", 1156, 1176, 4, 18166.98},
      {"argmat-dvisat", 1151, 1151, 0, 15259.38}, {"CoQuiAAS", 1132, 1132, 0, 10785.98},
      {"argmat-mpg", 1126, 1126, 0, 15133.06}, {"heureka", 1018, 1018, 0, 9869.94},
      {"ConArg", 1017, 1037, 4, 51015.41},     {"ArgTools", 935, 935, 0, 36134.08},
      {"ArgSemSAT", 900, 900, 0, 20077.48},    {"EqArgSolver", 401, 401, 0, 5430.45},
      {"argmat-clpb", 40, 40, 0, 4779.14},     {"gg-sts", -1170, 834, 402, 18203.86}}},
    {"PR",
     {{"ArgSemSAT", 1146, 1146, 0, 36607.37},   {"argmat-sat", 1139, 1139, 0, 25110.57},
      {"pyglaf", 1122, 1127, 1, 43394.57},      {"argmat-dvisat", 1075, 1075, 0, 28597.16},
      {"cegartix", 1075, 1075, 0, 58263.31},    {"goDIAMOND", 1014, 1069, 11, 51717.30},
      {"ArgTools", 898, 898, 0, 53147.54},      {"ConArg", 773, 773, 0, 48197.84},
      {"heureka", 745, 745, 0, 19691.87},       {"argmat-mpg", 745, 745, 0, 30744.76},
      {"EqArgSolver", 652, 652, 0, 6930.97},    {"CoQuiAAS", -863, 477, 268, 7756.35},
      {"gg-sts", -1107, 678, 357, 32999.15}}},
    {"ST",
     {{"pyglaf", 1183, 1183, 0, 47155.98},      {"goDIAMOND", 1143, 1143, 0, 30116.76},
      {"argmat-sat", 1129, 1129, 0, 22087.70},  {"cegartix", 1102, 1102, 0, 33963.81},
      {"argmat-mpg", 1073, 1073, 0, 52284.56},  {"argmat-dvisat", 1039, 1039, 0, 22591.20},
      {"ConArg", 1002, 1002, 0, 58792.29},      {"heureka", 938, 938, 0, 29417.69},
      {"ArgSemSAT", 888, 888, 0, 23200.99},     {"ArgTools", 687, 917, 46, 45465.87},
      {"EqArgSolver", 558, 558, 0, 7820.17},    {"argmat-clpb", 135, 135, 0, 8840.31},
      {"CoQuiAAS", -299, 821, 224, 13647.26},   {"gg-sts", -1193, 782, 395, 19037.19}}},
    {"SST",
     {{"argmat-sat", 1164, 1164, 0, 26043.50}, {"ArgSemSAT", 1113, 1113, 0, 38816.07},
      {"cegartix", 1091, 1091, 0, 62543.78},   {"pyglaf", 1047, 1047, 0, 41378.28},
      {"goDIAMOND", 1032, 1032, 0, 57957.15},  {"argmat-mpg", 755, 755, 0, 11464.36},
      {"ConArg", 668, 668, 0, 38572.13},       {"ArgTools", 268, 568, 60, 52108.16},
      {"gg-sts", -1321, 564, 377, 22846.63},   {"CoQuiAAS", -1642, 218, 372, 4855.65}}},
    {"STG",
     {{"argmat-sat", 1065, 1065, 0, 19948.06}, {"pyglaf", 909, 909, 0, 32019.47},
      {"cegartix", 898, 898, 0, 62852.40},     {"goDIAMOND", 724, 724, 0, 31394.75},
      {"ConArg", 649, 649, 0, 43482.21},       {"argmat-mpg", 618, 618, 0, 8381.57},
      {"ArgTools", 67, 172, 21, 9558.97},      {"CoQuiAAS", -305, 320, 125, 4162.59},
      {"gg-sts", -1325, 185, 302, 8242.35}}},
    {"GR",
     {{"CoQuiAAS", 695, 695, 0, 335.85},       {"cegartix", 695, 695, 0, 1152.51},
      {"heureka", 690, 690, 0, 671.37},        {"goDIAMOND", 688, 688, 0, 627.43},
      {"pyglaf", 683, 683, 0, 11595.16},       {"argmat-dvisat", 682, 682, 0, 163.80},
      {"argmat-clpb", 682, 682, 0, 263.21},    {"EqArgSolver", 682, 682, 0, 502.80},
      {"argmat-sat", 682, 682, 0, 504.75},     {"ArgTools", 674, 674, 0, 15664.26},
      {"argmat-mpg", 662, 662, 0, 580.80},     {"ConArg", 588, 588, 0, 703.33},
      {"ArgSemSAT", 561, 561, 0, 11444.85},    {"gg-sts", -1871, 264, 427, 4246.95}}},
    {"ID",
     {{"pyglaf", 585, 585, 0, 17341.50},       {"argmat-dvisat", 493, 493, 0, 17650.83},
      {"argmat-sat", 477, 477, 0, 16605.80},   {"goDIAMOND", 414, 414, 0, 22496.34},
      {"cegartix", 368, 548, 36, 25388.79},    {"ArgTools", 268, 268, 0, 20089.40},
      {"argmat-mpg", 217, 217, 0, 16031.89},   {"ConArg", 181, 181, 0, 13254.90},
      {"CoQuiAAS", -794, 156, 190, 2597.28},   {"gg-sts", -1050, 205, 251, 13379.17}}},
    {"D3",
     {{"argmat-dvisat", 276, 276, 0, 20222.07}, {"pyglaf", 275, 275, 0, 25212.29},
      {"argmat-sat", 271, 271, 0, 22441.56},    {"cegartix", 259, 259, 0, 35715.67},
      {"EqArgSolver", 192, 192, 0, 6577.89},    {"ConArg", 192, 192, 0, 52007.99},
      {"goDIAMOND", 179, 179, 0, 28857.58},     {"argmat-mpg", 164, 164, 0, 35916.74},
      {"gg-sts", -326, 144, 94, 25767.12},      {"CoQuiAAS", -498, 32, 106, 441.22}}},
    {"EE-PR", {{"ASPrMin", 285, 285, 0, 0}, {"ChimaerArg", 92, 207, 23, 0}}},
    {"EE-ST", {{"ChimaerArg", -220, 255, 95, 0}}},
};

Result scoring_replay() {
    Result r;
    std::size_t rows = 0;
    for (const auto& [track, table] : kPublished) {
        std::vector<SolverScore> scores;
        for (const auto& row : table) scores.push_back(score_from_counts(row.solver, row.correct, row.wrong, row.time));
        const auto ranked = order_scores(scores);
        for (const auto& row : table) {
            ++rows;
            const auto it = std::find_if(ranked.begin(), ranked.end(), [&](const auto& s) { return s.solver == row.solver; });
            const long got = it->points;
            r.require(got == row.points, track + " " + row.solver + ": " + std::to_string(row.correct) + " - 5*" +
                                             std::to_string(row.wrong) + " = " + std::to_string(got) +
                                             ", published " + std::to_string(row.points));
        }
    }
    r.notes.insert(r.notes.begin(), std::to_string(rows) + " published rows replayed");
    return r;
}

Result selection_replay() {
    Result r;
    const std::size_t sizes[] = {1, 2, 4, 11};
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::vector<std::vector<std::string>> pools(4);
        for (std::size_t d = 0; d < 4; ++d)
            for (std::size_t i = 0; i < sizes[d]; ++i) pools[d].push_back(std::to_string(d) + "/" + std::to_string(i));
        SeededRng rng(seed);
        const auto picked = select_benchmarks(pools, 10, rng);
        const auto g = picked[2].size(), d = picked[3].size();
        r.require(picked[0].size() == 1 && picked[1].size() == 2 && ((g == 4 && d == 3) || (g == 3 && d == 4)),
                  "seed " + std::to_string(seed) + " picked " + std::to_string(picked[0].size()) + "/" +
                      std::to_string(picked[1].size()) + "/" + std::to_string(g) + "/" + std::to_string(d));
    }

    // Five domains, every (domain, category) pool larger than a fair share.
    std::vector<ClassifiedInstance> pool;
    const char* domains[] = {"grounded", "scc", "stable", "barabasi", "watts"};
    for (auto c : kSelectableCategories)
        for (int d = 0; d < 5; ++d)
            for (int i = 0; i < 35 + 9 * d; ++i)
                pool.push_back({std::string(domains[d]) + "-" + std::string(to_string(c)) + "-" + std::to_string(i),
                                domains[d], c});
    const std::map<HardnessCategory, std::size_t> standard = {{HardnessCategory::VeryEasy, 50},
                                                              {HardnessCategory::Easy, 50},
                                                              {HardnessCategory::Medium, 100},
                                                              {HardnessCategory::Hard, 100},
                                                              {HardnessCategory::TooHard, 50}};
    auto group_c = standard;
    group_c[HardnessCategory::Hard] = 150;
    group_c[HardnessCategory::TooHard] = 0;
    for (auto group : {TaskGroup::A, TaskGroup::B, TaskGroup::C}) {
        const auto quota = SelectionQuota::for_group(group);
        const auto& want = group == TaskGroup::C ? group_c : standard;
        r.require(quota.counts == want, "quota table for group " + std::string(to_string(group)));
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            SeededRng rng(seed);
            const auto chosen = select_for_quota(pool, quota, rng);
            for (const auto& [c, n] : want) {
                std::map<std::string, std::size_t> per_domain;
                for (const auto& x : chosen)
                    if (x.category == c) ++per_domain[x.domain];
                std::size_t total = 0, lo = n, hi = 0;
                for (const char* d : domains) {
                    const auto k = per_domain[d];
                    total += k;
                    lo = std::min(lo, k);
                    hi = std::max(hi, k);
                }
                r.require(total == n, "group " + std::string(to_string(group)) + " " + std::string(to_string(c)) +
                                          ": " + std::to_string(total) + " of " + std::to_string(n));
                r.require(hi - lo <= 1, "group " + std::string(to_string(group)) + " " + std::string(to_string(c)) +
                                            ": domain spread " + std::to_string(hi - lo));
            }
        }
    }
    return r;
}

Result hardness_table() {
    Result r;
    using H = HardnessCategory;
    struct Row {
        std::optional<double> a, b, c;
        int crashes;
        H want;
    };
    const std::optional<double> none;
    const std::vector<Row> table = {
        {5.99, 5.99, 5.99, 0, H::VeryEasy}, {5.99, 6.0, 1.0, 0, H::Easy},     {6.0, 6.0, 6.0, 0, H::Easy},
        {59.99, 59.99, 1.0, 0, H::Easy},    {60.0, 1.0, 1.0, 0, H::Medium},   {599.0, 599.0, 599.0, 0, H::Medium},
        {599.99, 1.0, 1.0, 0, H::Medium},   {600.0, 1.0, 1.0, 0, H::Hard},    {1200.0, none, none, 0, H::Hard},
        {1201.0, 1300.0, none, 0, H::TooHard}, {none, none, none, 0, H::TooHard}, {1.0, 1.0, 1.0, 1, H::Hard},
        {1.0, 1200.0, 1.0, 1, H::Hard},     {1.0, 1.0, 1.0, 2, H::NotClassified}, {1.0, 1.0, 1.0, 3, H::NotClassified},
        {none, none, 1200.0, 1, H::Hard},   {none, none, 1201.0, 1, H::TooHard}, {none, none, 5.0, 2, H::NotClassified},
    };
    for (const auto& row : table) {
        std::array<ReferenceRun, 3> runs{ReferenceRun{row.a, false}, ReferenceRun{row.b, false}, ReferenceRun{row.c, false}};
        for (int i = 0; i < row.crashes; ++i) runs[static_cast<std::size_t>(i)] = ReferenceRun{std::nullopt, true};
        const auto got = classify_hardness(runs);
        auto cell = [](std::optional<double> v) { return v ? std::to_string(*v) : std::string("-"); };
        r.require(got == row.want, "(" + cell(row.a) + ", " + cell(row.b) + ", " + cell(row.c) + ", crashes " +
                                       std::to_string(row.crashes) + ") gave " + std::string(to_string(got)));
    }
    return r;
}

Result generator_invariants() {
    Result r;
    for (std::size_t n = 4; n <= 14; ++n)
        r.require(oracle_enumerate(Semantics::CO, gen_admbuster(n)).size() == 1,
                  "AdmBuster n=" + std::to_string(n) + " has more than one complete extension");
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto f = gen_sembuster(n);
        const auto co = oracle_enumerate(Semantics::CO, f);
        const auto pr = oracle_enumerate(Semantics::PR, f);
        const auto sst = oracle_enumerate(Semantics::SST, f);
        const auto tag = "SemBuster n=" + std::to_string(n) + ": ";
        // The invariant as stated: n+1 extensions that are complete and preferred alike.
        r.require(co.size() == n + 1 && co == pr, tag + "|CO| = " + std::to_string(co.size()) + ", |PR| = " +
                                                       std::to_string(pr.size()) + ", expected |CO| = |PR| = " +
                                                       std::to_string(n + 1));
        r.require(pr.size() == n + 1, tag + "|PR| = " + std::to_string(pr.size()));
        r.require(sst.size() == 1, tag + "|SST| = " + std::to_string(sst.size()));
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const SccGen cfg{30, 1 + seed % 6, 0.5, 0.3};
        const auto f = gen_scc(cfg, seed);
        // Blocks are contiguous and balanced: the first n % k blocks hold one extra argument.
        const std::size_t base = cfg.n / cfg.n_sccs, extra = cfg.n % cfg.n_sccs;
        auto block = [&](std::size_t i) {
            return i < extra * (base + 1) ? i / (base + 1) : extra + (i - extra * (base + 1)) / base;
        };
        for (const auto& [a, b] : f.attack_list())
            r.require(block(a) <= block(b), "SccGen seed " + std::to_string(seed) + ": backward attack " + f.name(a) +
                                                " -> " + f.name(b));
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const double pc = 0.05 + 0.01 * static_cast<double>(seed % 90);
        const std::size_t n = 30 + seed % 40;
        const auto bound = scc_bound(n, pc);
        const auto w = gen_watts({n, 4, 0.2, pc}, seed);
        const auto b = gen_barabasi({n, pc}, seed);
        r.require(static_cast<double>(count_sccs(w)) <= std::ceil(bound),
                  "Watts seed " + std::to_string(seed) + ": " + std::to_string(count_sccs(w)) + " SCCs");
        r.require(static_cast<double>(count_sccs(b)) <= std::ceil(bound),
                  "Barabasi seed " + std::to_string(seed) + ": " + std::to_string(count_sccs(b)) + " SCCs");
    }
    return r;
}

SolverDescriptor solver(const std::string& id, std::vector<std::string> command) {
    SolverDescriptor d;
    d.id = id;
    d.command = std::move(command);
    d.tasks = all_task_names();
    d.formats = {InputFormat::Apx, InputFormat::Tgf};
    return d;
}

Result harness_end_to_end() {
    Result r;
    const auto t0 = Clock::now();
    const auto dir = fs::temp_directory_path() / ("afkit_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::vector<ManifestEntry> entries;
    SeededRng rng(8);
    for (std::size_t i = 0; i < kHarnessInstances; ++i) {
        const std::size_t n = rng.between(3, 9);
        const auto f = i % 2 ? gen_erdos({n, 0.1 + 0.4 * rng.uniform()}, rng.next())
                             : gen_watts({std::max<std::size_t>(n, 5), 2, rng.uniform(), rng.uniform()}, rng.next());
        const auto fmt = i % 3 == 0 ? InputFormat::Tgf : InputFormat::Apx;
        const auto path = dir / ("i" + std::to_string(i) + (fmt == InputFormat::Apx ? ".apx" : ".tgf"));
        std::ofstream(path) << write_framework(f, fmt);
        for (const auto& name : all_task_names()) {
            auto task = *parse_task_name(name);
            if (needs_query(task.problem)) task.query = rng.pick(f.names());
            entries.push_back({"i" + std::to_string(i), path, fmt, task, i % 2 ? "erdos" : "watts", std::nullopt});
        }
    }
    RunOptions opts;
    opts.jobs = jobs_from_env(4);
    opts.limits = ResourceLimits{120, 2ULL << 30};
    const auto records = run_roster({solver("afkit-oracle", {AFKIT_CLI_PATH, "oracle"}),
                                     solver("afkit-optimized", {AFKIT_CLI_PATH}),
                                     solver("corrupt", {AFKIT_CORRUPT_SOLVER_PATH})},
                                    entries, opts);
    std::size_t judged = 0, penalties = 0;
    for (const auto& rec : records) {
        if (rec.solver == "corrupt") {
            ++penalties;
            r.require(rec.points == -5, "corrupt " + rec.question() + " got " + std::to_string(rec.points) + " (" +
                                            rec.reason + ")");
        } else {
            ++judged;
            r.require(rec.verdict == Outcome::Correct && !rec.unchecked,
                      rec.solver + " " + rec.question() + ": " + std::string(to_string(rec.verdict)) + " (" +
                          rec.reason + ")");
        }
    }
    r.require(records.size() == 3 * kHarnessInstances * all_task_names().size(), "record count");
    fs::remove_all(dir);
    const auto secs = seconds_since(t0);
    r.require(secs < kHarnessSeconds, "took " + std::to_string(secs) + " s");
    r.notes.insert(r.notes.begin(), std::to_string(judged) + " roster answers, " + std::to_string(penalties) +
                                        " corrupted answers, " + std::to_string(static_cast<int>(secs)) + " s");
    return r;
}

Result ideal_selector() {
    Result r;
    // Skeptical preferred argument h outside the empty grounded extension.
    const auto first = fixtures::sample_af();
    // Grounded {p} equals the preferred intersection.
    const Framework second({"p", "q"}, {{"p", "q"}});
    auto rate = [](const Framework& f, int branch, std::uint64_t seed) {
        SeededRng rng(seed);
        int hits = 0;
        for (int i = 0; i < kIdealDraws; ++i) hits += select_ideal_argument(f, rng).branch == branch;
        return static_cast<double>(hits) / kIdealDraws;
    };
    const double r1 = rate(first, 1, 2017), r2 = rate(second, 2, 2017);
    r.require(std::abs(r1 - kFirstBranchRate) <= kFirstBranchTol, "first branch rate " + std::to_string(r1));
    r.require(std::abs(r2 - kSecondBranchRate) <= kSecondBranchTol, "second branch rate " + std::to_string(r2));
    r.notes.insert(r.notes.begin(), "first branch " + std::to_string(r1) + ", second branch " + std::to_string(r2));
    return r;
}

}  // namespace

int main() {
    const auto corpus = small_corpus(kCorpusSize);
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"example framework golden values", golden},
        {"optimized engine agrees with the oracle", [&] { return equivalence(corpus); }},
        {"semantics identities", [&] { return identities(corpus); }},
        {"scoring replay of published tables", scoring_replay},
        {"benchmark selection replay", selection_replay},
        {"hardness classification boundaries", hardness_table},
        {"generator invariants", generator_invariants},
        {"harness end to end", harness_end_to_end},
        {"ideal argument selector", ideal_selector},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result res;
        try {
            res = criteria[i].second();
        } catch (const std::exception& e) {
            res.pass = false;
            res.notes.push_back(std::string("exception: ") + e.what());
        }
        failures += !res.pass;
        std::printf("%s %zu %s\n", res.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
        for (const auto& n : res.notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
