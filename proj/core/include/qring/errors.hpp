#pragma once

#include <stdexcept>
#include <string>

namespace qring {

// Base class for all workbench errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Inverting a scalar that is not a single Laurent term.
class NonUnitError : public Error {
public:
    explicit NonUnitError(const std::string& what) : Error(what) {}
};

// Operands built over different parameter spaces or presentations.
class MismatchError : public Error {
public:
    explicit MismatchError(const std::string& what) : Error(what) {}
};

// Malformed presentation data: bad rule shape, failed self-check, bad q-matrix.
class PresentationError : public Error {
public:
    explicit PresentationError(const std::string& what) : Error(what) {}
};

// Quotient by a generator subset whose relations force content outside the subset.
class ClosureError : public PresentationError {
public:
    explicit ClosureError(const std::string& what) : PresentationError(what) {}
};

// Lexical or syntax error; position is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace qring
