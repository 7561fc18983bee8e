#ifndef LHREG_ERRORS_HPP
#define LHREG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lhreg {

/// Malformed ideal text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A hard resource cap (generator count, face count, alphabet width) was hit.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A formula with hypotheses was requested for a hypergraph that does not
/// satisfy its hypothesis.
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An operation produced the unit ideal where a proper ideal was required.
class UnitIdealError : public std::domain_error {
public:
    UnitIdealError() : std::domain_error("result is the unit ideal") {}
};

}  // namespace lhreg

#endif  // LHREG_ERRORS_HPP
