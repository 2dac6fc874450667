#include "afkit/gen/generators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "afkit/core/errors.hpp"

namespace afkit {
namespace {

using Vertex = std::uint32_t;

// Mutable attack graph over vertices 0..n-1 used while generating.
class Digraph {
public:
    explicit Digraph(std::size_t n) : out_(n) {}

    std::size_t size() const noexcept { return out_.size(); }
    bool has(Vertex a, Vertex b) const { return keys_.count(key(a, b)) != 0; }
    bool add(Vertex a, Vertex b) {
        if (!keys_.insert(key(a, b)).second) return false;
        out_[a].push_back(b);
        order_.emplace_back(a, b);
        return true;
    }
    void remove(Vertex a, Vertex b) {
        if (keys_.erase(key(a, b)) == 0) return;
        auto& v = out_[a];
        v.erase(std::find(v.begin(), v.end(), b));
    }
    const std::vector<Vertex>& targets(Vertex a) const { return out_[a]; }

    Framework build(const std::vector<std::string>& names) const {
        FrameworkBuilder b;
        for (const auto& name : names) b.add_argument(name);
        for (const auto& [x, y] : order_)
            if (has(x, y)) b.add_attack(x, y);
        return std::move(b).build();
    }
    Framework build(const std::string& prefix = "a") const {
        std::vector<std::string> names;
        names.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) names.push_back(prefix + std::to_string(i + 1));
        return build(names);
    }

private:
    static std::uint64_t key(Vertex a, Vertex b) { return (std::uint64_t{a} << 32) | b; }

    std::vector<std::vector<Vertex>> out_;
    std::vector<std::pair<Vertex, Vertex>> order_;  // insertion order; may hold removed pairs
    std::unordered_set<std::uint64_t> keys_;
};

// Iterative Tarjan over any adjacency accessor.
template <class Targets>
std::vector<std::uint32_t> tarjan(std::size_t n, Targets&& targets, std::size_t& count) {
    constexpr std::uint32_t kUnvisited = ~std::uint32_t{0};
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
    std::vector<std::uint32_t> stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::pair<std::uint32_t, std::size_t>> call;  // vertex, next edge position
    std::uint32_t next_index = 0;
    count = 0;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos == 0 && index[v] == kUnvisited) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            const auto& succ = targets(v);
            if (pos < succ.size()) {
                const std::uint32_t w = succ[pos++];
                if (index[w] == kUnvisited) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = static_cast<std::uint32_t>(count);
                } while (w != v);
                ++count;
            }
            const std::uint32_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    return comp;
}

// Adds uniformly drawn new attacks until the SCC count drops to the bound.
// An attack inside one SCC cannot merge components, so those skip the recount.
void add_cycles(Digraph& g, double prob_cycles, SeededRng& rng) {
    const std::size_t n = g.size();
    if (n < 2) return;
    const double bound = scc_bound(n, prob_cycles);
    std::size_t count = 0;
    auto comp = tarjan(n, [&](std::uint32_t v) -> const std::vector<Vertex>& { return g.targets(v); }, count);
    while (static_cast<double>(count) > bound) {
        const auto a = static_cast<Vertex>(rng.below(n));
        const auto b = static_cast<Vertex>(rng.below(n));
        if (a == b || !g.add(a, b)) continue;
        if (comp[a] == comp[b]) continue;
        comp = tarjan(n, [&](std::uint32_t v) -> const std::vector<Vertex>& { return g.targets(v); }, count);
    }
}

void add_oriented(Digraph& g, Vertex a, Vertex b, SeededRng& rng) {
    if (rng.bernoulli(0.5))
        g.add(a, b);
    else
        g.add(b, a);
}

}  // namespace

double scc_bound(std::size_t n, double prob_cycles) {
    return std::max(1.0, static_cast<double>(n) * (1.0 - prob_cycles));
}

std::vector<std::uint32_t> scc_ids(const Framework& f, std::size_t* count) {
    std::size_t c = 0;
    std::vector<std::vector<Vertex>> adj(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) adj[i].assign(f.targets(i).begin(), f.targets(i).end());
    auto ids = tarjan(f.size(), [&](std::uint32_t v) -> const std::vector<Vertex>& { return adj[v]; }, c);
    if (count) *count = c;
    return ids;
}

std::size_t count_sccs(const Framework& f) {
    std::size_t c = 0;
    scc_ids(f, &c);
    return c;
}

Framework gen_grounded(const GroundedGen& cfg, std::uint64_t seed) {
    validate(cfg);
    const SeededRng base(seed);
    SeededRng dag = base.stream(1);
    SeededRng link = base.stream(2);
    const std::size_t n = cfg.n;
    Digraph g(n);
    std::vector<char> touched(n, 0);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (dag.bernoulli(cfg.prob_attacks)) {
                g.add(a, b);
                touched[a] = touched[b] = 1;
            }
    std::vector<Vertex> component;
    for (Vertex v = 0; v < n; ++v)
        if (touched[v]) component.push_back(v);
    for (Vertex v = 0; v < n; ++v) {
        if (touched[v]) continue;
        if (!component.empty()) add_oriented(g, v, link.pick(component), link);
        component.push_back(v);
    }
    return g.build();
}

Framework gen_scc(const SccGen& cfg, std::uint64_t seed) {
    validate(cfg);
    const SeededRng base(seed);
    SeededRng inner = base.stream(1);
    SeededRng outer = base.stream(2);
    const std::size_t n = cfg.n, k = cfg.n_sccs;
    // Component c holds [start[c], start[c+1]).
    std::vector<std::size_t> start(k + 1, 0);
    for (std::size_t c = 0; c < k; ++c) start[c + 1] = start[c] + n / k + (c < n % k ? 1 : 0);
    Digraph g(n);
    for (std::size_t c = 0; c < k; ++c)
        for (auto a = start[c]; a < start[c + 1]; ++a)
            for (auto b = start[c]; b < start[c + 1]; ++b)
                if (a != b && inner.bernoulli(cfg.inner_attack_prob))
                    g.add(static_cast<Vertex>(a), static_cast<Vertex>(b));
    for (std::size_t c = 0; c < k; ++c)
        for (auto a = start[c]; a < start[c + 1]; ++a)
            for (auto b = start[c + 1]; b < n; ++b)
                if (outer.bernoulli(cfg.outer_attack_prob)) g.add(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return g.build();
}

Framework gen_stable(const StableGen& cfg, std::uint64_t seed) {
    validate(cfg);
    const SeededRng base(seed);
    SeededRng shape = base.stream(1);
    SeededRng wiring = base.stream(2);
    const std::size_t n = cfg.n;
    constexpr int kRetries = 64;

    // Draw the grounded size g, block count k and extension sizes; retry while
    // they do not fit in n, then fall back to the smallest admissible layout.
    std::size_t g = 0;
    std::vector<std::size_t> blocks;
    bool fitted = false;
    for (int attempt = 0; attempt < kRetries && !fitted; ++attempt) {
        const auto gmax = std::min(cfg.max_size_of_grounded_extension, n);
        g = cfg.min_size_of_grounded_extension > gmax
                ? gmax
                : static_cast<std::size_t>(shape.between(static_cast<std::int64_t>(cfg.min_size_of_grounded_extension),
                                                         static_cast<std::int64_t>(gmax)));
        const auto k = static_cast<std::size_t>(shape.between(static_cast<std::int64_t>(cfg.min_num_extensions),
                                                               static_cast<std::int64_t>(cfg.max_num_extensions)));
        blocks.assign(k, 0);
        std::size_t used = g;
        for (auto& b : blocks) {
            const std::size_t lo = std::max(cfg.min_size_of_extensions, g + (k > 1 ? 1 : 0));
            const std::size_t hi = cfg.max_size_of_extensions;
            if (lo > hi) {
                used = n + 1;
                break;
            }
            b = static_cast<std::size_t>(shape.between(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi))) - g;
            used += b;
        }
        fitted = used <= n;
    }
    if (!fitted) {
        g = std::min(cfg.min_size_of_grounded_extension, n - 1);
        const std::size_t rest = n - g;
        const std::size_t k = std::max<std::size_t>(1, std::min(cfg.min_num_extensions, rest));
        blocks.assign(k, rest / k);
    }

    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    shape.shuffle(perm);
    std::size_t pos = 0;
    auto take = [&](std::size_t count) {
        std::vector<Vertex> out(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                                perm.begin() + static_cast<std::ptrdiff_t>(pos + count));
        pos += count;
        return out;
    };
    const auto grounded = take(g);
    std::vector<std::vector<Vertex>> ext;
    for (auto b : blocks) ext.push_back(take(b));
    const std::size_t rest = n - pos;
    const std::size_t defeated_count =
        grounded.empty() ? 0 : static_cast<std::size_t>(shape.between(0, static_cast<std::int64_t>(rest)));
    const auto defeated = take(defeated_count);
    const auto others = take(n - pos);

    Digraph gr(n);
    // Everything the grounded part defeats, with acyclic noise among it.
    for (std::size_t i = 0; i < defeated.size(); ++i) {
        gr.add(wiring.pick(grounded), defeated[i]);
        if (wiring.bernoulli(0.5)) gr.add(wiring.pick(grounded), defeated[i]);
        for (std::size_t j = i + 1; j < defeated.size(); ++j)
            if (wiring.bernoulli(0.05)) gr.add(defeated[i], defeated[j]);
    }
    // Each block attacks every non-grounded, non-defeated argument outside it.
    std::vector<Vertex> middle;
    for (const auto& b : ext) middle.insert(middle.end(), b.begin(), b.end());
    middle.insert(middle.end(), others.begin(), others.end());
    for (std::size_t i = 0; i < ext.size(); ++i) {
        std::unordered_set<Vertex> own(ext[i].begin(), ext[i].end());
        for (auto a : ext[i])
            for (auto b : middle)
                if (!own.count(b)) gr.add(a, b);
    }
    // Attacks from defeated arguments never change the labelling.
    for (auto d : defeated)
        for (auto m : middle)
            if (wiring.bernoulli(0.02)) gr.add(d, m);
    return gr.build();
}

Framework gen_erdos(const ErdosRenyi& cfg, std::uint64_t seed) {
    validate(cfg);
    SeededRng rng(seed);
    Digraph g(cfg.n);
    for (Vertex a = 0; a < cfg.n; ++a)
        for (Vertex b = a + 1; b < cfg.n; ++b)
            if (rng.bernoulli(cfg.prob_attacks)) add_oriented(g, a, b, rng);
    return g.build();
}

Framework gen_watts(const WattsStrogatz& cfg, std::uint64_t seed) {
    validate(cfg);
    const SeededRng base(seed);
    SeededRng ring = base.stream(1);
    SeededRng rewire = base.stream(2);
    SeededRng cycles = base.stream(3);
    const std::size_t n = cfg.n;
    Digraph g(n);
    std::vector<std::pair<Vertex, Vertex>> lattice;
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t j = 1; j <= cfg.k / 2; ++j) {
            const auto w = static_cast<Vertex>((v + j) % n);
            const bool forward = ring.bernoulli(0.5);
            if (forward ? g.add(v, w) : g.add(w, v)) lattice.emplace_back(forward ? v : w, forward ? w : v);
        }
    // Rewire the far endpoint of each lattice attack, keeping its direction.
    for (const auto& [a, b] : lattice) {
        if (!rewire.bernoulli(cfg.beta)) continue;
        const auto c = static_cast<Vertex>(rewire.below(n));
        if (c == a || c == b || g.has(a, c) || g.has(c, a)) continue;
        g.remove(a, b);
        g.add(a, c);
    }
    add_cycles(g, cfg.prob_cycles, cycles);
    return g.build();
}

Framework gen_barabasi(const BarabasiAlbert& cfg, std::uint64_t seed) {
    validate(cfg);
    const SeededRng base(seed);
    SeededRng growth = base.stream(1);
    SeededRng cycles = base.stream(2);
    const std::size_t n = cfg.n;
    Digraph g(n);
    // Each vertex appears once per incident edge; a uniform pick is degree-proportional.
    std::vector<Vertex> ends;
    for (Vertex v = 1; v < n; ++v) {
        const Vertex target = ends.empty() ? 0 : growth.pick(ends);
        add_oriented(g, v, target, growth);
        ends.push_back(v);
        ends.push_back(target);
    }
    add_cycles(g, cfg.prob_cycles, cycles);
    return g.build();
}

Framework gen_admbuster(std::size_t n) {
    validate(AdmBuster{n});
    const std::size_t inner = n - 2;
    const std::size_t nb = (inner + 1) / 2, nc = inner / 2;
    std::vector<std::string> names{"s"};
    for (std::size_t i = 1; i <= nb; ++i) names.push_back("b" + std::to_string(i));
    for (std::size_t i = 1; i <= nc; ++i) names.push_back("c" + std::to_string(i));
    names.emplace_back("t");
    auto b = [](std::size_t i) { return static_cast<Vertex>(i); };       // 1-based
    auto c = [&](std::size_t i) { return static_cast<Vertex>(nb + i); };  // 1-based
    const auto s = Vertex{0};
    const auto t = static_cast<Vertex>(n - 1);
    Digraph g(n);
    g.add(s, b(1));
    for (std::size_t i = 1; i <= nc; ++i) {
        g.add(b(i), c(i));
        g.add(c(i), b(i));
        if (i + 1 <= nb) g.add(c(i), b(i + 1));
    }
    g.add(b(nb), t);
    if (nc > 0) g.add(c(nc), t);
    return g.build(names);
}

Framework gen_sembuster(std::size_t n) {
    validate(SemBuster{n});
    std::vector<std::string> names;
    for (const char* block : {"a", "b", "c"})
        for (std::size_t i = 1; i <= n; ++i) names.push_back(block + std::to_string(i));
    auto a = [](std::size_t i) { return static_cast<Vertex>(i - 1); };
    auto b = [&](std::size_t i) { return static_cast<Vertex>(n + i - 1); };
    auto c = [&](std::size_t i) { return static_cast<Vertex>(2 * n + i - 1); };
    Digraph g(3 * n);
    for (std::size_t i = 1; i <= n; ++i) {
        g.add(a(i), b(i));
        g.add(b(i), a(i));
        if (i < n) g.add(b(i), a(i + 1));
        g.add(a(i), c(i));
        g.add(c(i), c(i));
    }
    return g.build(names);
}

Framework traffic_to_af(const Graph& graph, double p_symmetric, std::uint64_t seed) {
    validate(Traffic{p_symmetric});
    SeededRng rng(seed);
    std::unordered_map<std::string, Vertex> index;
    for (const auto& v : graph.vertices) {
        if (!index.emplace(v, static_cast<Vertex>(index.size())).second)
            throw MalformedGraph("duplicate vertex " + v);
    }
    Digraph g(graph.vertices.size());
    for (const auto& [u, v] : graph.edges) {
        const auto iu = index.find(u), iv = index.find(v);
        if (iu == index.end() || iv == index.end())
            throw MalformedGraph("edge " + u + " " + v + " mentions an undeclared vertex");
        if (rng.bernoulli(p_symmetric)) {
            g.add(iu->second, iv->second);
            g.add(iv->second, iu->second);
        } else {
            add_oriented(g, iu->second, iv->second, rng);
        }
    }
    return g.build(graph.vertices);
}

Framework generate(const GeneratorConfig& cfg, std::uint64_t seed) {
    validate(cfg);
    switch (cfg.index()) {
        case 0: return gen_grounded(std::get<GroundedGen>(cfg), seed);
        case 1: return gen_scc(std::get<SccGen>(cfg), seed);
        case 2: return gen_stable(std::get<StableGen>(cfg), seed);
        case 3: return gen_erdos(std::get<ErdosRenyi>(cfg), seed);
        case 4: return gen_watts(std::get<WattsStrogatz>(cfg), seed);
        case 5: return gen_barabasi(std::get<BarabasiAlbert>(cfg), seed);
        case 6: return gen_admbuster(std::get<AdmBuster>(cfg).n);
        case 7: return gen_sembuster(std::get<SemBuster>(cfg).n);
        default: throw InvalidConfig("traffic configs transform an input graph; use traffic_to_af");
    }
}

}  // namespace afkit
