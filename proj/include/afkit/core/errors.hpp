#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afkit {

/// Base class for every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument id that is not part of the framework it was used against.
class UnknownArgument : public Error {
public:
    explicit UnknownArgument(const std::string& id)
        : Error("unknown argument: " + id), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

class InvalidFramework : public Error {
public:
    using Error::Error;
};

class MalformedTask : public Error {
public:
    using Error::Error;
};

/// Raised when a search exhausts its node-expansion budget before finishing.
class BudgetExceeded : public Error {
public:
    BudgetExceeded() : Error("search budget exhausted") {}
};

class OracleCapExceeded : public Error {
public:
    OracleCapExceeded(std::size_t size, std::size_t cap)
        : Error("oracle size cap exceeded: " + std::to_string(size) + " arguments > cap " +
                std::to_string(cap)) {}
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// A selection asked for more instances than its pools hold.
class InsufficientPool : public Error {
public:
    using Error::Error;
};

/// An input graph whose edges mention undeclared vertices.
class MalformedGraph : public Error {
public:
    using Error::Error;
};

/// Input text that does not follow a file format; carries the 1-based line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An attack endpoint that was never declared as an argument.
class UndeclaredArgument : public ParseError {
public:
    UndeclaredArgument(std::size_t line, const std::string& id)
        : ParseError(line, "undeclared argument '" + id + "'"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

}  // namespace afkit
