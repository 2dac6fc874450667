#include "afkit/io/formats.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "afkit/core/errors.hpp"

namespace afkit {
namespace {

bool is_id_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Splits on LF; a trailing CR belongs to the line ending and is dropped.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (true) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        const auto start = i;
        while (i < s.size() && !is_space(s[i])) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

// Cursor over one APX statement.
class Scanner {
public:
    Scanner(std::string_view s, std::size_t line) : s_(s), line_(line) {}

    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string_view word() {
        skip();
        const auto start = pos_;
        while (pos_ < s_.size() && is_id_char(s_[pos_])) ++pos_;
        if (pos_ == start) fail("expected identifier");
        return s_.substr(start, pos_ - start);
    }
    void finish() {
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

private:
    void skip() {
        while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
    }
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

struct PendingAttack {
    std::string from, to;
    std::size_t line;
};

Framework assemble(FrameworkBuilder& b, const std::vector<PendingAttack>& attacks) {
    for (const auto& a : attacks) {
        const auto from = b.find(a.from);
        if (!from) throw UndeclaredArgument(a.line, a.from);
        const auto to = b.find(a.to);
        if (!to) throw UndeclaredArgument(a.line, a.to);
        b.add_attack(*from, *to);
    }
    return std::move(b).build();
}

void declare(FrameworkBuilder& b, std::string id, std::size_t line) {
    if (b.find(id)) throw ParseError(line, "duplicate argument '" + id + "'");
    b.add_argument(std::move(id));
}

}  // namespace

std::string_view to_string(InputFormat f) noexcept { return f == InputFormat::Apx ? "apx" : "tgf"; }

std::optional<InputFormat> parse_input_format(std::string_view text) noexcept {
    if (text == "apx") return InputFormat::Apx;
    if (text == "tgf") return InputFormat::Tgf;
    return std::nullopt;
}

Framework parse_apx(std::string_view text) {
    FrameworkBuilder b;
    std::vector<PendingAttack> attacks;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = trim(lines[i]);
        if (line.empty()) continue;
        Scanner sc(line, i + 1);
        const auto head = sc.word();
        if (head == "arg") {
            sc.expect('(');
            const auto id = sc.word();
            sc.expect(')');
            sc.expect('.');
            sc.finish();
            declare(b, std::string(id), i + 1);
        } else if (head == "att") {
            sc.expect('(');
            const auto from = sc.word();
            sc.expect(',');
            const auto to = sc.word();
            sc.expect(')');
            sc.expect('.');
            sc.finish();
            attacks.push_back({std::string(from), std::string(to), i + 1});
        } else {
            sc.fail("expected arg(...) or att(...)");
        }
    }
    return assemble(b, attacks);
}

Framework parse_tgf(std::string_view text) {
    FrameworkBuilder b;
    std::vector<PendingAttack> attacks;
    const auto lines = split_lines(text);
    bool edges = false;
    bool any = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = trim(lines[i]);
        if (line.empty()) continue;
        any = true;
        if (!edges && line == "#") {
            edges = true;
            continue;
        }
        const auto tokens = split_ws(line);
        if (!edges) {
            if (tokens.front().front() == '#') throw ParseError(i + 1, "malformed separator line");
            declare(b, std::string(tokens.front()), i + 1);
        } else {
            if (tokens.size() < 2) throw ParseError(i + 1, "edge line needs a source and a target");
            attacks.push_back({std::string(tokens[0]), std::string(tokens[1]), i + 1});
        }
    }
    if (any && !edges) throw ParseError(lines.size(), "missing '#' separator");
    return assemble(b, attacks);
}

Framework parse_framework(std::string_view text, InputFormat format) {
    return format == InputFormat::Apx ? parse_apx(text) : parse_tgf(text);
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Framework read_framework(const std::filesystem::path& path, InputFormat format) {
    return parse_framework(read_text(path), format);
}

std::string write_apx(const Framework& f) {
    std::string out;
    for (const auto& id : f.names()) {
        for (char c : id)
            if (!is_id_char(c)) throw InvalidFramework("id '" + id + "' is not writable as APX");
        out += "arg(" + id + ").\n";
    }
    for (const auto& [a, b] : f.attack_list()) out += "att(" + f.name(a) + "," + f.name(b) + ").\n";
    return out;
}

std::string write_tgf(const Framework& f) {
    std::string out;
    for (const auto& id : f.names()) {
        if (id == "#" || id.front() == '#') throw InvalidFramework("id '" + id + "' is not writable as TGF");
        for (char c : id)
            if (is_space(c)) throw InvalidFramework("id '" + id + "' is not writable as TGF");
        out += id + "\n";
    }
    out += "#\n";
    for (const auto& [a, b] : f.attack_list()) out += f.name(a) + " " + f.name(b) + "\n";
    return out;
}

std::string write_framework(const Framework& f, InputFormat format) {
    return format == InputFormat::Apx ? write_apx(f) : write_tgf(f);
}

}  // namespace afkit
