#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace afkit {

/// Fixed-universe bitset over argument indices of one framework.
class ArgSet {
public:
    ArgSet() = default;
    explicit ArgSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    static ArgSet full(std::size_t universe) {
        ArgSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    std::size_t universe() const noexcept { return size_; }

    bool contains(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void insert(std::size_t i) noexcept { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const ArgSet& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    bool is_proper_subset_of(const ArgSet& o) const noexcept { return is_subset_of(o) && *this != o; }
    bool intersects(const ArgSet& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    ArgSet& operator|=(const ArgSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    ArgSet& operator&=(const ArgSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    /// Set difference.
    ArgSet& operator-=(const ArgSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend ArgSet operator|(ArgSet a, const ArgSet& b) { return a |= b; }
    friend ArgSet operator&(ArgSet a, const ArgSet& b) { return a &= b; }
    friend ArgSet operator-(ArgSet a, const ArgSet& b) { return a -= b; }

    friend bool operator==(const ArgSet&, const ArgSet&) = default;

    /// Calls f(i) for each member in increasing index order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                const int b = std::countr_zero(w);
                f(k * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const noexcept {
        std::size_t h = size_;
        for (auto w : words_) h = h * 1099511628211ULL ^ static_cast<std::size_t>(w);
        return h;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ArgSetHash {
    std::size_t operator()(const ArgSet& s) const noexcept { return s.hash(); }
};

}  // namespace afkit
