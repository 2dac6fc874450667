#include "afkit/gen/presets.hpp"

#include <cmath>

#include "afkit/core/errors.hpp"
#include "afkit/gen/rng.hpp"

namespace afkit {
namespace {

constexpr std::size_t kAdmBusterSizes[] = {1000,   2000,   4000,   6000,    8000,    10000,  20000,
                                           50000,  100000, 200000, 500000, 1000000, 2000000};
constexpr std::size_t kSemBusterSizes[] = {60,   150,  300,  600,  900,  1200, 1500, 1800,
                                           2400, 3000, 3600, 4200, 4800, 5400, 6000, 7500};

// Ratio num/den as the double nearest the decimal literal.
double ratio(int num, int den) { return static_cast<double>(num) / den; }

std::size_t draw(SeededRng& rng, std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"grounded", "scc", "stable", "erdos", "watts", "barabasi", "admbuster", "sembuster"};
}

std::size_t watts_k(std::size_t n, unsigned multiple) {
    const double raw = multiple * std::log2(static_cast<double>(n));
    auto k = static_cast<std::size_t>(2 * std::llround(raw / 2));
    if (k < 2) k = 2;
    while (k >= n && k >= 2) k -= 2;
    return k;
}

std::vector<PresetInstance> preset(std::string_view name, std::uint64_t seed) {
    SeededRng params = SeededRng(seed).stream(0);
    SeededRng seeds = SeededRng(seed).stream(1);
    std::vector<PresetInstance> out;
    auto push = [&](GeneratorConfig cfg) { out.push_back({std::move(cfg), seeds.next()}); };

    if (name == "grounded") {
        for (int p = 1; p <= 5; ++p)
            for (int i = 0; i < 10; ++i) push(GroundedGen{draw(params, 100, 1500), ratio(p, 100)});
    } else if (name == "scc") {
        for (int inner = 3; inner <= 7; ++inner)
            for (int outer = 1; outer <= 4; ++outer)
                for (int i = 0; i < 25; ++i) {
                    const auto n = draw(params, 100, 1500);
                    push(SccGen{n, draw(params, 1, 50), ratio(inner, 10), ratio(outer * 5, 100)});
                }
        for (int inner = 3; inner <= 7; ++inner)
            for (int outer = 1; outer <= 4; ++outer)
                for (int i = 0; i < 5; ++i) {
                    const auto n = draw(params, 5000, 10000);
                    push(SccGen{n, draw(params, 40, 50), ratio(inner, 10), ratio(outer * 5, 100)});
                }
    } else if (name == "stable") {
        for (int i = 0; i < 500; ++i) push(StableGen{draw(params, 100, 800), 5, 30, 5, 40, 5, 40});
    } else if (name == "erdos") {
        for (std::size_t n = 100; n <= 500; n += 100)
            for (int p = 1; p <= 10; ++p)
                for (int i = 0; i < 10; ++i) push(ErdosRenyi{n, ratio(p, 10)});
    } else if (name == "watts") {
        for (std::size_t n = 100; n <= 500; n += 100)
            for (unsigned m = 1; m <= 4; ++m)
                for (int beta = 1; beta <= 9; beta += 2)
                    for (int pc = 1; pc <= 7; pc += 2) push(WattsStrogatz{n, watts_k(n, m), ratio(beta, 10), ratio(pc, 10)});
    } else if (name == "barabasi") {
        for (std::size_t n = 20; n <= 200; n += 20)
            for (int pc = 0; pc <= 9; ++pc)
                for (int i = 0; i < 5; ++i) push(BarabasiAlbert{n, ratio(pc, 10)});
    } else if (name == "admbuster") {
        for (auto n : kAdmBusterSizes) push(AdmBuster{n});
    } else if (name == "sembuster") {
        for (auto n : kSemBusterSizes) push(SemBuster{n});
    } else {
        throw InvalidConfig("unknown preset '" + std::string(name) + "'");
    }
    return out;
}

}  // namespace afkit
