#pragma once

// Backtracking search over {in, out, undec} labellings with domain propagation.
// Private to the library.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "afkit/core/argset.hpp"
#include "afkit/core/errors.hpp"
#include "afkit/core/framework.hpp"

namespace afkit::detail {

inline constexpr std::uint8_t kIn = 1;
inline constexpr std::uint8_t kOut = 2;
inline constexpr std::uint8_t kUndec = 4;
inline constexpr std::uint8_t kAny = kIn | kOut | kUndec;

/// Complete: in iff all attackers out, out iff some attacker in.
/// Stable: complete without undec.
/// ConflictFree: in-set is conflict-free and out is exactly what it attacks.
enum class LabelMode { Complete, Stable, ConflictFree };

/// Counts search nodes across every search of one solve call.
class NodeBudget {
public:
    explicit NodeBudget(std::optional<std::uint64_t> limit = std::nullopt) : limit_(limit) {}
    void charge() {
        ++used_;
        if (limit_ && used_ > *limit_) throw BudgetExceeded();
    }
    std::uint64_t used() const noexcept { return used_; }

private:
    std::optional<std::uint64_t> limit_;
    std::uint64_t used_ = 0;
};

class Labelling {
public:
    Labelling(const Framework& f, LabelMode mode, NodeBudget& budget);

    /// Intersects the domain of x with mask before search starts.
    void restrict(std::size_t x, std::uint8_t mask);

    std::uint8_t domain(std::size_t x) const noexcept { return dom_[x]; }
    /// Arguments whose domain still meets mask.
    ArgSet possible(std::uint8_t mask) const;
    const Framework& framework() const noexcept { return f_; }

    /// Depth-first search. prune(*this) runs at every propagated node and
    /// returns true to cut it; leaf(in, out) runs at every total labelling and
    /// returns true to stop. Returns true iff a leaf stopped the search.
    template <class Prune, class Leaf>
    bool search(Prune&& prune, Leaf&& leaf);

private:
    struct Frame {
        std::size_t var;
        std::uint8_t remaining;
        std::size_t mark;
    };

    bool set(std::size_t x, std::uint8_t d);
    bool revise(std::size_t x);
    bool propagate();
    void undo(std::size_t mark);
    void clear_queue();
    std::optional<std::size_t> pick() const;
    bool leaf_valid(const ArgSet& in) const;

    const Framework& f_;
    LabelMode mode_;
    NodeBudget& budget_;
    bool root_failed_ = false;
    std::vector<std::uint8_t> dom_;
    std::vector<std::pair<std::uint32_t, std::uint8_t>> trail_;
    std::vector<std::uint32_t> queue_;
    std::vector<char> queued_;
    std::vector<std::uint32_t> order_;  // by degree, descending
};

template <class Prune, class Leaf>
bool Labelling::search(Prune&& prune, Leaf&& leaf) {
    if (root_failed_ || !propagate()) return false;
    std::vector<Frame> stack;
    bool descend = true;  // true: evaluate current node; false: backtrack
    for (;;) {
        if (descend) {
            budget_.charge();
            if (!prune(*this)) {
                if (auto v = pick()) {
                    stack.push_back({*v, dom_[*v], trail_.size()});
                } else {
                    const ArgSet in = possible(kIn);
                    if (leaf_valid(in) && leaf(in, possible(kOut))) return true;
                }
            }
            descend = false;
        }
        if (stack.empty()) return false;
        Frame& top = stack.back();
        undo(top.mark);
        if (top.remaining == 0) {
            stack.pop_back();
            continue;
        }
        std::uint8_t value = kIn;
        while (!(top.remaining & value)) value = static_cast<std::uint8_t>(value << 1);
        top.remaining = static_cast<std::uint8_t>(top.remaining & ~value);
        if (set(top.var, value) && propagate())
            descend = true;
        else
            clear_queue();
    }
}

}  // namespace afkit::detail
