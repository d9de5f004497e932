#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace berge {

/// Input violates a documented precondition of the operation.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A proven quantitative guarantee failed to hold. Always a bug.
class GuaranteeViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input file; line is 1-based (0 when unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), source_(std::move(source)),
          line_(line) {}

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

}  // namespace berge
