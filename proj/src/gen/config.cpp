#include "afkit/gen/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "afkit/core/errors.hpp"

namespace afkit {
namespace {

struct Field {
    std::string_view key;
    std::variant<std::size_t*, double*> target;
};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<Field> fields(GeneratorConfig& cfg) {
    return std::visit(
        overloaded{
            [](GroundedGen& c) { return std::vector<Field>{{"n", &c.n}, {"probAttacks", &c.prob_attacks}}; },
            [](SccGen& c) {
                return std::vector<Field>{{"n", &c.n},
                                          {"nSCCs", &c.n_sccs},
                                          {"innerAttackProb", &c.inner_attack_prob},
                                          {"outerAttackProb", &c.outer_attack_prob}};
            },
            [](StableGen& c) {
                return std::vector<Field>{{"n", &c.n},
                                          {"minNumExtensions", &c.min_num_extensions},
                                          {"maxNumExtensions", &c.max_num_extensions},
                                          {"minSizeOfExtensions", &c.min_size_of_extensions},
                                          {"maxSizeOfExtensions", &c.max_size_of_extensions},
                                          {"minSizeOfGroundedExtension", &c.min_size_of_grounded_extension},
                                          {"maxSizeOfGroundedExtension", &c.max_size_of_grounded_extension}};
            },
            [](ErdosRenyi& c) { return std::vector<Field>{{"n", &c.n}, {"probAttacks", &c.prob_attacks}}; },
            [](WattsStrogatz& c) {
                return std::vector<Field>{
                    {"n", &c.n}, {"k", &c.k}, {"beta", &c.beta}, {"probCycles", &c.prob_cycles}};
            },
            [](BarabasiAlbert& c) { return std::vector<Field>{{"n", &c.n}, {"probCycles", &c.prob_cycles}}; },
            [](AdmBuster& c) { return std::vector<Field>{{"n", &c.n}}; },
            [](SemBuster& c) { return std::vector<Field>{{"n", &c.n}}; },
            [](Traffic& c) { return std::vector<Field>{{"pSymmetric", &c.p_symmetric}}; },
        },
        cfg);
}

void check_prob(double p, std::string_view name) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidConfig(std::string(name) + " must lie in [0,1]");
}

void check_positive(std::size_t v, std::string_view name) {
    if (v == 0) throw InvalidConfig(std::string(name) + " must be positive");
}

void check_order(std::size_t lo, std::size_t hi, std::string_view name) {
    if (lo > hi) throw InvalidConfig("min" + std::string(name) + " exceeds max" + std::string(name));
}

std::vector<std::string_view> tokens(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) out.push_back(text.substr(start, i - start));
    }
    return out;
}

std::size_t parse_count(std::string_view key, std::string_view v) {
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw InvalidConfig(std::string(key) + ": expected a non-negative integer, got '" + std::string(v) + "'");
    return out;
}

double parse_real(std::string_view key, std::string_view v) {
    // from_chars for double is missing in older libstdc++; strtod needs a terminator.
    const std::string s(v);
    char* end = nullptr;
    const double out = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(out))
        throw InvalidConfig(std::string(key) + ": expected a number, got '" + s + "'");
    return out;
}

GeneratorConfig make_kind(std::string_view kind) {
    if (kind == "grounded") return GroundedGen{};
    if (kind == "scc") return SccGen{};
    if (kind == "stable") return StableGen{};
    if (kind == "erdos") return ErdosRenyi{};
    if (kind == "watts") return WattsStrogatz{};
    if (kind == "barabasi") return BarabasiAlbert{};
    if (kind == "admbuster") return AdmBuster{};
    if (kind == "sembuster") return SemBuster{};
    if (kind == "traffic") return Traffic{};
    throw InvalidConfig("unknown generator kind '" + std::string(kind) + "'");
}

// Applies key=value tokens; "seed" is handed back instead of applied.
std::optional<std::uint64_t> apply(GeneratorConfig& cfg, const std::vector<std::string_view>& toks) {
    std::optional<std::uint64_t> seed;
    auto fs = fields(cfg);
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto eq = toks[i].find('=');
        if (eq == std::string_view::npos) throw InvalidConfig("expected key=value, got '" + std::string(toks[i]) + "'");
        const auto key = toks[i].substr(0, eq);
        const auto value = toks[i].substr(eq + 1);
        if (key == "seed") {
            std::uint64_t s = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
            if (ec != std::errc() || ptr != value.data() + value.size())
                throw InvalidConfig("seed: expected an unsigned 64-bit integer");
            seed = s;
            continue;
        }
        bool found = false;
        for (auto& f : fs) {
            if (f.key != key) continue;
            found = true;
            std::visit(overloaded{[&](std::size_t* p) { *p = parse_count(key, value); },
                                  [&](double* p) { *p = parse_real(key, value); }},
                       f.target);
        }
        if (!found)
            throw InvalidConfig("unknown key '" + std::string(key) + "' for " + std::string(kind_name(cfg)));
    }
    validate(cfg);
    return seed;
}

}  // namespace

std::string_view kind_name(const GeneratorConfig& cfg) {
    static constexpr std::string_view names[] = {"grounded", "scc",       "stable",    "erdos",  "watts",
                                                 "barabasi", "admbuster", "sembuster", "traffic"};
    return names[cfg.index()];
}

void validate(const GeneratorConfig& cfg) {
    std::visit(overloaded{
                   [](const GroundedGen& c) {
                       check_positive(c.n, "n");
                       check_prob(c.prob_attacks, "probAttacks");
                   },
                   [](const SccGen& c) {
                       check_positive(c.n, "n");
                       check_positive(c.n_sccs, "nSCCs");
                       if (c.n_sccs > c.n) throw InvalidConfig("nSCCs exceeds n");
                       check_prob(c.inner_attack_prob, "innerAttackProb");
                       check_prob(c.outer_attack_prob, "outerAttackProb");
                   },
                   [](const StableGen& c) {
                       check_positive(c.n, "n");
                       check_positive(c.min_num_extensions, "minNumExtensions");
                       check_order(c.min_num_extensions, c.max_num_extensions, "NumExtensions");
                       check_positive(c.min_size_of_extensions, "minSizeOfExtensions");
                       check_order(c.min_size_of_extensions, c.max_size_of_extensions, "SizeOfExtensions");
                       check_order(c.min_size_of_grounded_extension, c.max_size_of_grounded_extension,
                                   "SizeOfGroundedExtension");
                       if (c.min_size_of_extensions > c.n) throw InvalidConfig("minSizeOfExtensions exceeds n");
                       if (c.min_size_of_grounded_extension > c.n)
                           throw InvalidConfig("minSizeOfGroundedExtension exceeds n");
                   },
                   [](const ErdosRenyi& c) {
                       check_positive(c.n, "n");
                       check_prob(c.prob_attacks, "probAttacks");
                   },
                   [](const WattsStrogatz& c) {
                       check_positive(c.n, "n");
                       if (c.k % 2 != 0) throw InvalidConfig("k must be even");
                       if (c.k >= c.n) throw InvalidConfig("k must be below n");
                       check_prob(c.beta, "beta");
                       check_prob(c.prob_cycles, "probCycles");
                   },
                   [](const BarabasiAlbert& c) {
                       check_positive(c.n, "n");
                       check_prob(c.prob_cycles, "probCycles");
                   },
                   [](const AdmBuster& c) {
                       if (c.n < 4) throw InvalidConfig("AdmBuster needs n >= 4");
                   },
                   [](const SemBuster& c) { check_positive(c.n, "n"); },
                   [](const Traffic& c) { check_prob(c.p_symmetric, "pSymmetric"); },
               },
               cfg);
}

GeneratorConfig parse_config(std::string_view text) {
    const auto toks = tokens(text);
    if (toks.empty()) throw InvalidConfig("empty generator config");
    GeneratorConfig cfg = make_kind(toks[0]);
    if (apply(cfg, toks)) throw InvalidConfig("seed is not part of a generator config");
    return cfg;
}

std::string format_config(const GeneratorConfig& cfg) {
    GeneratorConfig copy = cfg;
    std::ostringstream out;
    out << kind_name(cfg);
    for (const auto& f : fields(copy)) {
        out << ' ' << f.key << '=';
        std::visit(overloaded{[&](std::size_t* p) { out << *p; },
                              [&](double* p) {
                                  std::ostringstream num;
                                  num.precision(17);
                                  num << *p;
                                  out << num.str();
                              }},
                   f.target);
    }
    return out.str();
}

std::vector<BatchEntry> parse_batch(std::string_view text) {
    std::vector<BatchEntry> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        const auto toks = tokens(line);
        if (toks.empty() || toks[0].front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        try {
            GeneratorConfig cfg = make_kind(toks[0]);
            auto seed = apply(cfg, toks);
            out.push_back({std::move(cfg), seed, line_no});
        } catch (const InvalidConfig& e) {
            throw ParseError(line_no, e.what());
        }
        if (end == text.size()) break;
    }
    return out;
}

}  // namespace afkit
