#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "afkit/core/argset.hpp"

namespace afkit {

using ArgumentId = std::string;

/// A set of argument ids, kept sorted and duplicate-free.
///
/// Ordering between extensions is lexicographic on the sorted member lists,
/// which is also the canonical order used when printing enumerations.
class Extension {
public:
    Extension() = default;
    Extension(std::initializer_list<ArgumentId> ids) : Extension(std::vector<ArgumentId>(ids)) {}
    explicit Extension(std::vector<ArgumentId> ids);

    const std::vector<ArgumentId>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(std::string_view id) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const Extension&, const Extension&) = default;
    friend auto operator<=>(const Extension&, const Extension&) = default;

private:
    std::vector<ArgumentId> members_;
};

/// Canonical set of extensions: sorted, no duplicates.
using ExtensionSet = std::vector<Extension>;

/// Sorts and deduplicates in place.
void canonicalize(ExtensionSet& set);

/// Immutable attack graph over named arguments.
///
/// Arguments are indexed 0..size()-1 in declaration order. Duplicate attacks
/// collapse to one; self-attacks are allowed.
class Framework {
public:
    using Index = std::uint32_t;

    Framework() = default;
    /// Throws InvalidFramework on duplicate or empty ids and UnknownArgument
    /// when an attack mentions an id not listed in `args`.
    Framework(std::vector<ArgumentId> args,
              const std::vector<std::pair<ArgumentId, ArgumentId>>& attacks);

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t attack_count() const noexcept { return attack_list_.size(); }

    const ArgumentId& name(std::size_t i) const { return names_[i]; }
    const std::vector<ArgumentId>& names() const noexcept { return names_; }

    std::optional<Index> find(std::string_view id) const;
    /// Throws UnknownArgument.
    Index index(std::string_view id) const;

    std::span<const Index> attackers(std::size_t i) const { return attackers_[i]; }
    std::span<const Index> targets(std::size_t i) const { return targets_[i]; }
    bool attacks(std::size_t from, std::size_t to) const;

    /// Attack pairs in insertion order.
    const std::vector<std::pair<Index, Index>>& attack_list() const noexcept { return attack_list_; }

    ArgSet empty_set() const { return ArgSet(size()); }
    ArgSet all() const { return ArgSet::full(size()); }

    /// Throws UnknownArgument for ids outside the framework.
    ArgSet to_set(const Extension& e) const;
    Extension to_extension(const ArgSet& s) const;
    ExtensionSet to_extensions(const std::vector<ArgSet>& sets) const;

    /// Same argument names and same attacks, independent of declaration order.
    friend bool operator==(const Framework& a, const Framework& b);

private:
    friend class FrameworkBuilder;

    std::vector<ArgumentId> names_;
    std::unordered_map<std::string, Index> lookup_;
    std::vector<std::vector<Index>> attackers_;
    std::vector<std::vector<Index>> targets_;
    std::vector<std::pair<Index, Index>> attack_list_;
};

/// Incremental construction for generators and parsers.
class FrameworkBuilder {
public:
    using Index = Framework::Index;

    /// Throws InvalidFramework on duplicate or empty ids.
    Index add_argument(ArgumentId id);
    /// Returns false when the attack was already present.
    bool add_attack(Index from, Index to);
    bool has_attack(Index from, Index to) const;

    std::size_t size() const noexcept { return fw_.names_.size(); }
    std::size_t attack_count() const noexcept { return fw_.attack_list_.size(); }
    std::optional<Index> find(std::string_view id) const { return fw_.find(id); }

    /// Adjacency lists are sorted on build.
    Framework build() &&;

private:
    Framework fw_;
    std::unordered_set<std::uint64_t> seen_;
};

}  // namespace afkit
