#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afkit/core/framework.hpp"
#include "afkit/engine/engine.hpp"
#include "afkit/io/solution.hpp"

namespace afkit {

enum class Outcome { Correct, Incorrect, Zero };

std::string_view to_string(Outcome o) noexcept;
std::optional<Outcome> parse_outcome(std::string_view text) noexcept;

/// 1, -5 or 0.
constexpr int points_for(Outcome o) noexcept { return o == Outcome::Correct ? 1 : o == Outcome::Incorrect ? -5 : 0; }

struct Judgement {
    Outcome outcome = Outcome::Zero;
    /// Accepted without any check; only lone unverifiable answers get this.
    bool unchecked = false;
    std::string reason;

    int points() const noexcept { return points_for(outcome); }
};

/// What the judge may consult. With `answer` set, answers are compared to it.
/// With only `framework` set, single extensions are checked with verify(),
/// which settles SE answers and exposes non-extensions in EE/D3 answers.
struct ReferenceBundle {
    std::optional<Answer> answer;
    const Framework* framework = nullptr;
    std::optional<std::uint64_t> verify_budget;
};

/// Applies the correctness rules. Returns nullopt when the bundle cannot
/// settle the answer (a DC/DS verdict without a reference answer, or an EE
/// answer whose sets all verify but whose completeness is unknown).
std::optional<Judgement> try_judge(const TaskSpec& task, const SolutionText& text, const ReferenceBundle& ref);

/// try_judge, with unsettled answers scored zero.
Judgement judge(const TaskSpec& task, const SolutionText& text, const ReferenceBundle& ref);

/// Computes the reference answer with the engine: the oracle when the
/// framework is within `oracle_cap`, otherwise the labelling search under
/// `node_budget`. Returns nullopt when the budget runs out.
std::optional<Answer> reference_answer(const TaskSpec& task, const Framework& f,
                                       std::size_t oracle_cap = kDefaultOracleCap,
                                       std::optional<std::uint64_t> node_budget = std::nullopt);

/// Judges every participant's answer to one (task, instance): reference
/// answer first, then per-extension verification, then majority vote over
/// the answers still open. An answer that is the only one left open is
/// accepted unchecked; a tie for the majority scores zero.
std::vector<Judgement> verify_cascade(const TaskSpec& task, const ReferenceBundle& ref,
                                      const std::vector<SolutionText>& outputs);

}  // namespace afkit
