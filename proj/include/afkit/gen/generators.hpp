#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "afkit/core/framework.hpp"
#include "afkit/gen/config.hpp"
#include "afkit/gen/rng.hpp"

// Benchmark generators. Randomized generators name arguments a1..an and are
// deterministic in (config, seed). All throw InvalidConfig on bad parameters.

namespace afkit {

Framework gen_grounded(const GroundedGen& cfg, std::uint64_t seed);
/// Components are contiguous blocks a1.., sizes differing by at most one.
Framework gen_scc(const SccGen& cfg, std::uint64_t seed);
Framework gen_stable(const StableGen& cfg, std::uint64_t seed);
Framework gen_erdos(const ErdosRenyi& cfg, std::uint64_t seed);
Framework gen_watts(const WattsStrogatz& cfg, std::uint64_t seed);
Framework gen_barabasi(const BarabasiAlbert& cfg, std::uint64_t seed);

/// Start s, blocks b1.. and c1.. of total size n-2, terminal t:
/// s->b1, bi<->ci, ci->b(i+1), and the last b (and last c) attack t.
/// The grounded labelling is total, so it is the only complete one.
Framework gen_admbuster(std::size_t n);

/// Blocks a1..an, b1..bn, c1..cn: ai<->bi, bi->a(i+1), ai->ci, ci->ci.
/// Preferred extensions are {a1..ak, b(k+1)..bn} for k = 0..n; the all-a
/// extension is stable and the only semi-stable one.
Framework gen_sembuster(std::size_t n);

/// Undirected input graph for the traffic transformer.
struct Graph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

/// Keeps the vertex set; each edge becomes a mutual attack with probability
/// p_symmetric, otherwise one attack in a uniformly drawn direction. Throws
/// MalformedGraph on edges with undeclared endpoints.
Framework traffic_to_af(const Graph& graph, double p_symmetric, std::uint64_t seed);

/// Dispatches on the config kind. Traffic configs need a graph and throw here.
Framework generate(const GeneratorConfig& cfg, std::uint64_t seed);

/// Strongly connected components by iterative Tarjan; ids are 0-based in
/// order of completion.
std::vector<std::uint32_t> scc_ids(const Framework& f, std::size_t* count = nullptr);
std::size_t count_sccs(const Framework& f);

/// Largest SCC count the probCycles postprocessing leaves behind.
double scc_bound(std::size_t n, double prob_cycles);

}  // namespace afkit
