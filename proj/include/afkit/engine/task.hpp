#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "afkit/core/framework.hpp"
#include "afkit/core/semantics.hpp"

namespace afkit {

enum class Problem { DC, DS, SE, EE, D3 };

std::string_view to_string(Problem p) noexcept;

/// One competition task: a problem under a semantics, plus the query argument
/// for acceptance problems.
struct TaskSpec {
    Problem problem = Problem::EE;
    std::optional<Semantics> semantics;  // absent only for D3
    std::optional<ArgumentId> query;     // required for DC/DS

    static TaskSpec dc(Semantics s, ArgumentId a) { return {Problem::DC, s, std::move(a)}; }
    static TaskSpec ds(Semantics s, ArgumentId a) { return {Problem::DS, s, std::move(a)}; }
    static TaskSpec se(Semantics s) { return {Problem::SE, s, std::nullopt}; }
    static TaskSpec ee(Semantics s) { return {Problem::EE, s, std::nullopt}; }
    static TaskSpec d3() { return {Problem::D3, std::nullopt, std::nullopt}; }

    /// Wire name such as "EE-PR" or "D3"; the query is not part of it.
    std::string name() const;

    /// Throws MalformedTask when the shape is not one of the 25 tasks.
    void validate() const;

    friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

/// Parses "DC-CO", "D3", ... (no query). Returns nullopt for unknown names and
/// for combinations outside the catalog, such as "DS-GR".
std::optional<TaskSpec> parse_task_name(std::string_view name);

/// All 25 task names in catalog order: per semantics DC, DS, SE, EE (only DC and
/// SE for GR and ID), then D3.
std::vector<std::string> all_task_names();

bool needs_query(Problem p) noexcept;

struct Verdict {
    bool yes = false;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// SE result: an extension, or nullopt for the printed "NO".
struct SingleExtension {
    std::optional<Extension> extension;
    friend bool operator==(const SingleExtension&, const SingleExtension&) = default;
};

struct Enumeration {
    ExtensionSet extensions;  // canonical
    friend bool operator==(const Enumeration&, const Enumeration&) = default;
};

struct D3Triple {
    ExtensionSet grounded;
    ExtensionSet stable;
    ExtensionSet preferred;
    friend bool operator==(const D3Triple&, const D3Triple&) = default;
};

using Answer = std::variant<Verdict, SingleExtension, Enumeration, D3Triple>;

/// True when the alternative held by `a` is the one `p` produces.
bool shape_matches(Problem p, const Answer& a) noexcept;

}  // namespace afkit
