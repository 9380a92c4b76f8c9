#pragma once

#include <stdexcept>
#include <string>

namespace hopfk {

/* A mathematical verdict failure: the input parsed fine but a checked law
 * does not hold (a non-associative table, a comultiplication that is not
 * coassociative, a coaction that is not Galois, ...).  `code` is a stable
 * machine-readable name; `what()` carries the human explanation with the
 * offending indices or witness summary.
 */
class MathError : public std::runtime_error {
public:
    MathError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Malformed input text or bad CLI usage: not a mathematical statement.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

// Broken internal invariant.  Reaching one of these is a bug, never a
// statement about the input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& message) : std::logic_error(message) {}
};

inline void internal_check(bool ok, const std::string& message) {
    if (!ok) throw InternalError(message);
}

}  // namespace hopfk
