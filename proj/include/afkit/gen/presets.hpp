#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "afkit/gen/config.hpp"

namespace afkit {

/// One instance of a preset: its config and the seed to generate it with.
struct PresetInstance {
    GeneratorConfig config;
    std::uint64_t seed = 0;
};

/// Names accepted by preset(): grounded, scc, stable, erdos, watts, barabasi,
/// admbuster, sembuster.
std::vector<std::string> preset_names();

/// The published parameter grid for a domain. Values drawn from random[a,b]
/// and per-instance seeds are derived from `seed`. Throws InvalidConfig for
/// unknown names.
std::vector<PresetInstance> preset(std::string_view name, std::uint64_t seed);

/// Nearest even integer to c*log2(n), at least 2 and below n.
std::size_t watts_k(std::size_t n, unsigned multiple);

}  // namespace afkit
