#include "afkit/io/solution.hpp"

#include <vector>

#include "afkit/core/errors.hpp"

namespace afkit {
namespace {

std::string write_extension(const Extension& e) {
    std::string out = "[";
    bool first = true;
    for (const auto& id : e) {
        if (!first) out += ',';
        out += id;
        first = false;
    }
    return out + "]";
}

std::string write_enumeration(ExtensionSet set, bool line_mode) {
    canonicalize(set);
    if (set.empty()) return "[]";
    std::string out = "[";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ',';
        if (line_mode) out += '\n';
        out += write_extension(set[i]);
    }
    if (line_mode) out += '\n';
    return out + "]";
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }
bool is_delim(char c) { return c == '[' || c == ']' || c == ','; }

// Tokens are brackets, commas and maximal runs of other non-space bytes.
class Reader {
public:
    explicit Reader(std::string_view s) : s_(s) {}

    std::string_view next() {
        skip();
        if (pos_ >= s_.size()) return {};
        if (is_delim(s_[pos_])) return s_.substr(pos_++, 1);
        const auto start = pos_;
        while (pos_ < s_.size() && !is_space(s_[pos_]) && !is_delim(s_[pos_])) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    std::string_view peek() {
        const auto saved = pos_;
        const auto t = next();
        pos_ = saved;
        return t;
    }
    bool at_end() {
        skip();
        return pos_ >= s_.size();
    }

private:
    void skip() {
        while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
    }
    std::string_view s_;
    std::size_t pos_ = 0;
};

bool is_word(std::string_view t) { return !t.empty() && !is_delim(t.front()); }

std::optional<Extension> read_extension(Reader& r) {
    if (r.next() != "[") return std::nullopt;
    std::vector<ArgumentId> ids;
    if (r.peek() == "]") {
        r.next();
        return Extension{};
    }
    while (true) {
        const auto id = r.next();
        if (!is_word(id)) return std::nullopt;
        ids.emplace_back(id);
        const auto sep = r.next();
        if (sep == "]") break;
        if (sep != ",") return std::nullopt;
    }
    return Extension(std::move(ids));
}

std::optional<ExtensionSet> read_enumeration(Reader& r) {
    if (r.next() != "[") return std::nullopt;
    ExtensionSet set;
    if (r.peek() == "]") {
        r.next();
        return set;
    }
    while (true) {
        auto e = read_extension(r);
        if (!e) return std::nullopt;
        set.push_back(std::move(*e));
        const auto sep = r.next();
        if (sep == "]") break;
        if (sep != ",") return std::nullopt;
    }
    canonicalize(set);
    return set;
}

std::optional<Answer> read_answer(Problem problem, Reader& r) {
    switch (problem) {
        case Problem::DC:
        case Problem::DS: {
            const auto t = r.next();
            if (t == "YES") return Verdict{true};
            if (t == "NO") return Verdict{false};
            return std::nullopt;
        }
        case Problem::SE: {
            if (r.peek() == "NO") {
                r.next();
                return SingleExtension{std::nullopt};
            }
            auto e = read_extension(r);
            if (!e) return std::nullopt;
            return SingleExtension{std::move(*e)};
        }
        case Problem::EE: {
            auto s = read_enumeration(r);
            if (!s) return std::nullopt;
            return Enumeration{std::move(*s)};
        }
        case Problem::D3: {
            D3Triple t;
            for (auto* part : {&t.grounded, &t.stable, &t.preferred}) {
                auto s = read_enumeration(r);
                if (!s) return std::nullopt;
                *part = std::move(*s);
            }
            return t;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string write_solution(const TaskSpec& task, const Answer& answer, WriteOptions options) {
    if (!shape_matches(task.problem, answer))
        throw MalformedTask("answer shape does not fit task " + task.name());
    if (const auto* v = std::get_if<Verdict>(&answer)) return v->yes ? "YES" : "NO";
    if (const auto* s = std::get_if<SingleExtension>(&answer))
        return s->extension ? write_extension(*s->extension) : "NO";
    if (const auto* e = std::get_if<Enumeration>(&answer))
        return write_enumeration(e->extensions, options.line_per_extension);
    const auto& d = std::get<D3Triple>(answer);
    const bool lm = options.line_per_extension;
    return write_enumeration(d.grounded, lm) + "\n" + write_enumeration(d.stable, lm) + "\n" +
           write_enumeration(d.preferred, lm);
}

SolutionText parse_solution(const TaskSpec& task, std::string_view text) noexcept {
    SolutionText out;
    try {
        out.raw = std::string(text);
        Reader r(text);
        auto answer = read_answer(task.problem, r);
        if (answer && r.at_end()) out.parsed = std::move(answer);
    } catch (...) {
        out.parsed.reset();
    }
    return out;
}

}  // namespace afkit
