#include "afkit/harness/judge.hpp"

#include <algorithm>

#include "afkit/core/errors.hpp"
#include "afkit/core/verify.hpp"

namespace afkit {
namespace {

Judgement make(Outcome o, std::string reason) { return {o, false, std::move(reason)}; }

bool blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; });
}

bool contains(const ExtensionSet& set, const Extension& e) { return std::binary_search(set.begin(), set.end(), e); }

// Tri-state extension check: nullopt when the verifier ran out of budget.
std::optional<bool> check(Semantics sem, const Extension& e, const ReferenceBundle& ref) {
    const auto& f = *ref.framework;
    for (const auto& id : e)
        if (!f.find(id)) return false;
    try {
        return verify(sem, f, e, ref.verify_budget);
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
}

enum class Compare { Equal, Foreign, Subset };

// Compares a claimed enumeration against the full reference.
Compare compare(const ExtensionSet& claimed, const ExtensionSet& reference) {
    if (claimed == reference) return Compare::Equal;
    for (const auto& e : claimed)
        if (!contains(reference, e)) return Compare::Foreign;
    return Compare::Subset;
}

// An enumeration checked set by set. Incorrect as soon as one set fails;
// nullopt otherwise since completeness stays unknown.
std::optional<Judgement> check_each(Semantics sem, const ExtensionSet& claimed, const ReferenceBundle& ref) {
    bool unknown = false;
    for (const auto& e : claimed) {
        const auto ok = check(sem, e, ref);
        if (!ok) unknown = true;
        else if (!*ok) return make(Outcome::Incorrect, "contains a set that is not an extension");
    }
    if (!unknown && is_single_status(sem) && claimed.size() == 1) return make(Outcome::Correct, "verified");
    return std::nullopt;
}

std::optional<Judgement> judge_se(Semantics sem, const SingleExtension& claimed, const ReferenceBundle& ref) {
    const SingleExtension* expected = ref.answer ? std::get_if<SingleExtension>(&*ref.answer) : nullptr;
    if (!claimed.extension) {
        if (expected) return expected->extension ? make(Outcome::Incorrect, "an extension exists")
                                                 : make(Outcome::Correct, "no extension exists");
        // Only stable semantics can lack extensions.
        if (sem != Semantics::ST) return make(Outcome::Incorrect, "an extension always exists");
        return std::nullopt;
    }
    if (expected && !expected->extension) return make(Outcome::Incorrect, "no extension exists");
    if (ref.framework) {
        const auto ok = check(sem, *claimed.extension, ref);
        if (ok) return *ok ? make(Outcome::Correct, "verified") : make(Outcome::Incorrect, "not an extension");
    }
    if (expected && *expected->extension == *claimed.extension) return make(Outcome::Correct, "matches reference");
    if (expected && is_single_status(sem)) return make(Outcome::Incorrect, "differs from the unique extension");
    return std::nullopt;
}

std::optional<Judgement> judge_ee(Semantics sem, const ExtensionSet& claimed, const ReferenceBundle& ref) {
    if (ref.answer) {
        if (const auto* r = std::get_if<Enumeration>(&*ref.answer)) {
            switch (compare(claimed, r->extensions)) {
                case Compare::Equal: return make(Outcome::Correct, "matches reference");
                case Compare::Foreign: return make(Outcome::Incorrect, "contains a set that is not an extension");
                case Compare::Subset: return make(Outcome::Zero, "some extensions missing");
            }
        }
    }
    if (ref.framework) return check_each(sem, claimed, ref);
    return std::nullopt;
}

std::optional<Judgement> judge_d3(const D3Triple& claimed, const ReferenceBundle& ref) {
    if (ref.answer) {
        if (const auto* r = std::get_if<D3Triple>(&*ref.answer)) {
            const Compare parts[] = {compare(claimed.grounded, r->grounded), compare(claimed.stable, r->stable),
                                     compare(claimed.preferred, r->preferred)};
            if (std::find(std::begin(parts), std::end(parts), Compare::Foreign) != std::end(parts))
                return make(Outcome::Incorrect, "contains a set that is not an extension");
            if (std::all_of(std::begin(parts), std::end(parts), [](Compare c) { return c == Compare::Equal; }))
                return make(Outcome::Correct, "matches reference");
            return make(Outcome::Zero, "some extensions missing");
        }
    }
    if (ref.framework) {
        for (const auto& [sem, part] : {std::pair{Semantics::GR, &claimed.grounded},
                                        std::pair{Semantics::ST, &claimed.stable},
                                        std::pair{Semantics::PR, &claimed.preferred}}) {
            auto j = check_each(sem, *part, ref);
            if (j && j->outcome == Outcome::Incorrect) return j;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(Outcome o) noexcept {
    switch (o) {
        case Outcome::Correct: return "correct";
        case Outcome::Incorrect: return "incorrect";
        case Outcome::Zero: return "zero";
    }
    return "zero";
}

std::optional<Outcome> parse_outcome(std::string_view text) noexcept {
    for (auto o : {Outcome::Correct, Outcome::Incorrect, Outcome::Zero})
        if (to_string(o) == text) return o;
    return std::nullopt;
}

std::optional<Judgement> try_judge(const TaskSpec& task, const SolutionText& text, const ReferenceBundle& ref) {
    if (!text.parsed) return make(Outcome::Zero, blank(text.raw) ? "empty output" : "unparsable output");
    const auto& ans = *text.parsed;
    if (!shape_matches(task.problem, ans)) return make(Outcome::Zero, "unparsable output");
    switch (task.problem) {
        case Problem::DC:
        case Problem::DS: {
            if (!ref.answer) return std::nullopt;
            const auto* expected = std::get_if<Verdict>(&*ref.answer);
            if (!expected) return std::nullopt;
            return std::get<Verdict>(ans) == *expected ? make(Outcome::Correct, "matches reference")
                                                        : make(Outcome::Incorrect, "wrong verdict");
        }
        case Problem::SE: return judge_se(*task.semantics, std::get<SingleExtension>(ans), ref);
        case Problem::EE: return judge_ee(*task.semantics, std::get<Enumeration>(ans).extensions, ref);
        case Problem::D3: return judge_d3(std::get<D3Triple>(ans), ref);
    }
    return std::nullopt;
}

Judgement judge(const TaskSpec& task, const SolutionText& text, const ReferenceBundle& ref) {
    if (auto j = try_judge(task, text, ref)) return *j;
    return make(Outcome::Zero, "could not be verified");
}

std::optional<Answer> reference_answer(const TaskSpec& task, const Framework& f, std::size_t oracle_cap,
                                       std::optional<std::uint64_t> node_budget) {
    try {
        if (f.size() <= oracle_cap) return solve(task, f, oracle_cap);
        return solve_optimized(task, f, EngineOptions{node_budget});
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
}

std::vector<Judgement> verify_cascade(const TaskSpec& task, const ReferenceBundle& ref,
                                      const std::vector<SolutionText>& outputs) {
    std::vector<Judgement> out(outputs.size());
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        if (auto j = try_judge(task, outputs[i], ref)) out[i] = std::move(*j);
        else open.push_back(i);
    }
    if (open.empty()) return out;
    if (open.size() == 1) {
        out[open.front()] = {Outcome::Correct, true, "sole answer, not verified"};
        return out;
    }

    // Distinct open answers with their support.
    std::vector<std::pair<const Answer*, std::size_t>> tally;
    for (auto i : open) {
        const auto& a = *outputs[i].parsed;
        auto it = std::find_if(tally.begin(), tally.end(), [&](const auto& t) { return *t.first == a; });
        if (it == tally.end()) tally.emplace_back(&a, 1);
        else ++it->second;
    }
    const auto best = std::max_element(tally.begin(), tally.end(),
                                       [](const auto& x, const auto& y) { return x.second < y.second; });
    if (best->second * 2 <= open.size()) {
        for (auto i : open) out[i] = make(Outcome::Zero, "no majority");
        return out;
    }
    ReferenceBundle majority{*best->first, ref.framework, ref.verify_budget};
    for (auto i : open) {
        out[i] = judge(task, outputs[i], majority);
        out[i].reason = "majority vote: " + out[i].reason;
    }
    return out;
}

}  // namespace afkit
