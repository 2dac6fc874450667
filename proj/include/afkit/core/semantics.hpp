#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace afkit {

enum class Semantics { CO, PR, ST, SST, STG, GR, ID };

inline constexpr std::array<Semantics, 7> kAllSemantics = {
    Semantics::CO, Semantics::PR, Semantics::ST, Semantics::SST,
    Semantics::STG, Semantics::GR, Semantics::ID};

/// Grounded and ideal always have exactly one extension.
constexpr bool is_single_status(Semantics s) noexcept { return s == Semantics::GR || s == Semantics::ID; }

std::string_view to_string(Semantics s) noexcept;
std::optional<Semantics> parse_semantics(std::string_view text) noexcept;

}  // namespace afkit
