#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace afkit {

struct GroundedGen {
    std::size_t n = 0;
    double prob_attacks = 0;
    friend bool operator==(const GroundedGen&, const GroundedGen&) = default;
};

struct SccGen {
    std::size_t n = 0;
    std::size_t n_sccs = 1;
    double inner_attack_prob = 0;
    double outer_attack_prob = 0;
    friend bool operator==(const SccGen&, const SccGen&) = default;
};

/// Bounds are soft targets; extension sizes count the grounded part too.
struct StableGen {
    std::size_t n = 0;
    std::size_t min_num_extensions = 1;
    std::size_t max_num_extensions = 1;
    std::size_t min_size_of_extensions = 1;
    std::size_t max_size_of_extensions = 1;
    std::size_t min_size_of_grounded_extension = 0;
    std::size_t max_size_of_grounded_extension = 0;
    friend bool operator==(const StableGen&, const StableGen&) = default;
};

struct ErdosRenyi {
    std::size_t n = 0;
    double prob_attacks = 0;
    friend bool operator==(const ErdosRenyi&, const ErdosRenyi&) = default;
};

/// k must be even and below n.
struct WattsStrogatz {
    std::size_t n = 0;
    std::size_t k = 0;
    double beta = 0;
    double prob_cycles = 0;
    friend bool operator==(const WattsStrogatz&, const WattsStrogatz&) = default;
};

struct BarabasiAlbert {
    std::size_t n = 0;
    double prob_cycles = 0;
    friend bool operator==(const BarabasiAlbert&, const BarabasiAlbert&) = default;
};

struct AdmBuster {
    std::size_t n = 4;
    friend bool operator==(const AdmBuster&, const AdmBuster&) = default;
};

struct SemBuster {
    std::size_t n = 1;
    friend bool operator==(const SemBuster&, const SemBuster&) = default;
};

/// Needs an input graph; see traffic_to_af.
struct Traffic {
    double p_symmetric = 0;
    friend bool operator==(const Traffic&, const Traffic&) = default;
};

using GeneratorConfig = std::variant<GroundedGen, SccGen, StableGen, ErdosRenyi, WattsStrogatz, BarabasiAlbert,
                                     AdmBuster, SemBuster, Traffic>;

/// Throws InvalidConfig naming the offending field.
void validate(const GeneratorConfig& cfg);

/// Generator kind as written in config text: grounded, scc, stable, erdos,
/// watts, barabasi, admbuster, sembuster, traffic.
std::string_view kind_name(const GeneratorConfig& cfg);

/// Parses "kind key=value ...". Keys use the published parameter names
/// (n, probAttacks, nSCCs, innerAttackProb, outerAttackProb, k, beta,
/// probCycles, pSymmetric, minNumExtensions, ...). Unset keys keep their
/// defaults; unknown keys are errors. Throws InvalidConfig.
GeneratorConfig parse_config(std::string_view text);

/// Inverse of parse_config; lists every key.
std::string format_config(const GeneratorConfig& cfg);

/// One config line of a batch file, with an optional explicit seed.
struct BatchEntry {
    GeneratorConfig config;
    std::optional<std::uint64_t> seed;
    std::size_t line = 0;
};

/// One config per line; blank lines and lines starting with '#' are skipped.
/// A "seed=<u64>" token sets the entry seed. Throws ParseError with the line.
std::vector<BatchEntry> parse_batch(std::string_view text);

}  // namespace afkit
