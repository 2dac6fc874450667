#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "afkit/core/framework.hpp"

namespace afkit {

enum class InputFormat { Apx, Tgf };

std::string_view to_string(InputFormat f) noexcept;
/// Accepts "apx" and "tgf".
std::optional<InputFormat> parse_input_format(std::string_view text) noexcept;

/// Lines `arg(<id>).` and `att(<id>,<id>).` with ids over [A-Za-z0-9_].
/// Blank lines are skipped, whitespace around tokens is tolerated and CRLF is
/// accepted. Declarations may follow the attacks that use them.
/// Throws ParseError with the line number, UndeclaredArgument for attack
/// endpoints that are never declared.
Framework parse_apx(std::string_view text);

/// Node lines (first token is the id, the rest is a label), a `#` line, then
/// `src dst` edge lines with an optional label. Text with no non-blank lines
/// is the empty framework; otherwise a missing `#` is an error.
Framework parse_tgf(std::string_view text);

Framework parse_framework(std::string_view text, InputFormat format);

/// Reads a file; throws Error when it cannot be opened.
Framework read_framework(const std::filesystem::path& path, InputFormat format);
std::string read_text(const std::filesystem::path& path);

/// Arguments in declaration order, then attacks in insertion order, LF line
/// ends. Throws InvalidFramework when an id is not writable in the format.
std::string write_apx(const Framework& f);
std::string write_tgf(const Framework& f);
std::string write_framework(const Framework& f, InputFormat format);

}  // namespace afkit
