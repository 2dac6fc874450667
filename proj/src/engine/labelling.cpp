#include "labelling.hpp"

#include <algorithm>
#include <bit>

namespace afkit::detail {

Labelling::Labelling(const Framework& f, LabelMode mode, NodeBudget& budget)
    : f_(f), mode_(mode), budget_(budget), queued_(f.size(), 0) {
    const std::size_t n = f.size();
    const std::uint8_t init = mode == LabelMode::Stable ? static_cast<std::uint8_t>(kIn | kOut) : kAny;
    dom_.assign(n, init);
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        order_[i] = static_cast<std::uint32_t>(i);
        if (f.attacks(i, i)) dom_[i] = static_cast<std::uint8_t>(dom_[i] & ~kIn);
        if (dom_[i] == 0) root_failed_ = true;
    }
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
        return f.attackers(a).size() + f.targets(a).size() > f.attackers(b).size() + f.targets(b).size();
    });
    queue_.reserve(n);
    for (std::size_t i = n; i-- > 0;) {
        queue_.push_back(static_cast<std::uint32_t>(i));
        queued_[i] = 1;
    }
}

void Labelling::restrict(std::size_t x, std::uint8_t mask) {
    if (!set(x, static_cast<std::uint8_t>(dom_[x] & mask))) root_failed_ = true;
}

ArgSet Labelling::possible(std::uint8_t mask) const {
    ArgSet out(dom_.size());
    for (std::size_t i = 0; i < dom_.size(); ++i)
        if (dom_[i] & mask) out.insert(i);
    return out;
}

bool Labelling::set(std::size_t x, std::uint8_t d) {
    if (d == dom_[x]) return true;
    if (d == 0) return false;
    trail_.emplace_back(static_cast<std::uint32_t>(x), dom_[x]);
    dom_[x] = d;
    if (!queued_[x]) {
        queued_[x] = 1;
        queue_.push_back(static_cast<std::uint32_t>(x));
    }
    for (auto t : f_.targets(x))
        if (!queued_[t]) {
            queued_[t] = 1;
            queue_.push_back(t);
        }
    return true;
}

void Labelling::undo(std::size_t mark) {
    while (trail_.size() > mark) {
        const auto [x, d] = trail_.back();
        trail_.pop_back();
        dom_[x] = d;
    }
}

void Labelling::clear_queue() {
    for (auto x : queue_) queued_[x] = 0;
    queue_.clear();
}

bool Labelling::propagate() {
    while (!queue_.empty()) {
        const std::size_t x = queue_.back();
        queue_.pop_back();
        queued_[x] = 0;
        if (!revise(x)) {
            clear_queue();
            return false;
        }
    }
    return true;
}

bool Labelling::revise(std::size_t x) {
    const auto attackers = f_.attackers(x);
    const std::size_t deg = attackers.size();
    std::size_t in_poss = 0, out_poss = 0, non_in_poss = 0, undec_poss = 0, non_out_poss = 0;
    std::size_t last_in = 0, last_undec = 0, last_non_out = 0;
    for (auto b : attackers) {
        const std::uint8_t d = dom_[b];
        if (d & kIn) ++in_poss, last_in = b;
        if (d & kOut) ++out_poss;
        if (d & (kOut | kUndec)) ++non_in_poss;
        if (d & kUndec) ++undec_poss, last_undec = b;
        if (d & (kIn | kUndec)) ++non_out_poss, last_non_out = b;
    }

    std::uint8_t support = 0;
    if (mode_ == LabelMode::ConflictFree) {
        if (non_in_poss == deg) support |= kIn | kUndec;
        if (in_poss > 0) support |= kOut;
    } else {
        if (out_poss == deg) support |= kIn;
        if (in_poss > 0) support |= kOut;
        if (non_in_poss == deg && undec_poss > 0) support |= kUndec;
    }
    const std::uint8_t d = static_cast<std::uint8_t>(dom_[x] & support);
    if (!set(x, d)) return false;

    // Narrow the attackers to what the remaining labels of x allow.
    if (!(d & kOut))
        for (auto b : attackers)
            if (!set(b, static_cast<std::uint8_t>(dom_[b] & ~kIn))) return false;
    if (d == kOut && in_poss == 1 && !set(last_in, static_cast<std::uint8_t>(dom_[last_in] & kIn))) return false;
    if (mode_ == LabelMode::ConflictFree) return true;

    if (d == kIn)
        for (auto b : attackers)
            if (!set(b, static_cast<std::uint8_t>(dom_[b] & kOut))) return false;
    if (!(d & kIn) && non_out_poss == 1 &&
        !set(last_non_out, static_cast<std::uint8_t>(dom_[last_non_out] & ~kOut)))
        return false;
    if (d == kUndec && undec_poss == 1 &&
        !set(last_undec, static_cast<std::uint8_t>(dom_[last_undec] & kUndec)))
        return false;
    return true;
}

std::optional<std::size_t> Labelling::pick() const {
    std::optional<std::size_t> best;
    int best_size = 4;
    for (auto x : order_) {
        const int size = std::popcount(dom_[x]);
        if (size > 1 && size < best_size) {
            best = x;
            best_size = size;
            if (size == 2) break;
        }
    }
    return best;
}

bool Labelling::leaf_valid(const ArgSet& in) const {
    for (std::size_t x = 0; x < dom_.size(); ++x) {
        bool some_in = false, all_out = true;
        for (auto b : f_.attackers(x)) {
            if (in.contains(b)) some_in = true;
            if (dom_[b] != kOut) all_out = false;
        }
        const std::uint8_t d = dom_[x];
        if (mode_ == LabelMode::ConflictFree) {
            if (d == kIn && some_in) return false;
            if ((d == kOut) != some_in) return false;
        } else {
            if ((d == kIn) != all_out) return false;
            if ((d == kOut) != some_in) return false;
        }
    }
    return true;
}

}  // namespace afkit::detail
