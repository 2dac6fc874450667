#include "afkit/core/framework.hpp"

#include <algorithm>

#include "afkit/core/errors.hpp"

namespace afkit {

Extension::Extension(std::vector<ArgumentId> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Extension::contains(std::string_view id) const {
    return std::binary_search(members_.begin(), members_.end(), id,
                              [](const auto& a, const auto& b) { return std::string_view(a) < std::string_view(b); });
}

void canonicalize(ExtensionSet& set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

Framework::Framework(std::vector<ArgumentId> args,
                     const std::vector<std::pair<ArgumentId, ArgumentId>>& attacks) {
    FrameworkBuilder b;
    for (auto& a : args) b.add_argument(std::move(a));
    for (const auto& [from, to] : attacks) {
        auto f = b.find(from);
        if (!f) throw UnknownArgument(from);
        auto t = b.find(to);
        if (!t) throw UnknownArgument(to);
        b.add_attack(*f, *t);
    }
    *this = std::move(b).build();
}

std::optional<Framework::Index> Framework::find(std::string_view id) const {
    auto it = lookup_.find(std::string(id));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

Framework::Index Framework::index(std::string_view id) const {
    auto i = find(id);
    if (!i) throw UnknownArgument(std::string(id));
    return *i;
}

bool Framework::attacks(std::size_t from, std::size_t to) const {
    const auto& t = targets_[from];
    return std::binary_search(t.begin(), t.end(), static_cast<Index>(to));
}

ArgSet Framework::to_set(const Extension& e) const {
    ArgSet s(size());
    for (const auto& id : e) s.insert(index(id));
    return s;
}

Extension Framework::to_extension(const ArgSet& s) const {
    std::vector<ArgumentId> ids;
    s.for_each([&](std::size_t i) { ids.push_back(names_[i]); });
    return Extension(std::move(ids));
}

ExtensionSet Framework::to_extensions(const std::vector<ArgSet>& sets) const {
    ExtensionSet out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(to_extension(s));
    canonicalize(out);
    return out;
}

bool operator==(const Framework& a, const Framework& b) {
    if (a.size() != b.size() || a.attack_count() != b.attack_count()) return false;
    for (const auto& n : a.names_)
        if (!b.find(n)) return false;
    for (const auto& [f, t] : a.attack_list_) {
        auto bf = b.find(a.names_[f]);
        auto bt = b.find(a.names_[t]);
        if (!b.attacks(*bf, *bt)) return false;
    }
    return true;
}

FrameworkBuilder::Index FrameworkBuilder::add_argument(ArgumentId id) {
    if (id.empty()) throw InvalidFramework("empty argument id");
    if (fw_.lookup_.count(id)) throw InvalidFramework("duplicate argument: " + id);
    const auto idx = static_cast<Index>(fw_.names_.size());
    fw_.lookup_.emplace(id, idx);
    fw_.names_.push_back(std::move(id));
    fw_.attackers_.emplace_back();
    fw_.targets_.emplace_back();
    return idx;
}

static std::uint64_t pair_key(std::uint32_t from, std::uint32_t to) {
    return (static_cast<std::uint64_t>(from) << 32) | to;
}

bool FrameworkBuilder::add_attack(Index from, Index to) {
    if (from >= size() || to >= size()) throw InvalidFramework("attack endpoint out of range");
    if (!seen_.insert(pair_key(from, to)).second) return false;
    fw_.attack_list_.emplace_back(from, to);
    fw_.targets_[from].push_back(to);
    fw_.attackers_[to].push_back(from);
    return true;
}

bool FrameworkBuilder::has_attack(Index from, Index to) const { return seen_.count(pair_key(from, to)) > 0; }

Framework FrameworkBuilder::build() && {
    for (auto& v : fw_.attackers_) std::sort(v.begin(), v.end());
    for (auto& v : fw_.targets_) std::sort(v.begin(), v.end());
    seen_.clear();
    return std::move(fw_);
}

}  // namespace afkit
