#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace afkit {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seeded 64-bit Mersenne Twister with distributions written out by hand so
/// that a seed yields the same draws on every standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    /// Independent generator for one phase of an algorithm.
    SeededRng stream(std::uint64_t phase) const { return SeededRng(splitmix64(seed_ ^ splitmix64(phase + 1))); }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % bound;
    }
    /// Uniform on [lo, hi], inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace afkit
