#pragma once

// Exception hierarchy shared by every matsos module. Each pipeline failure
// has its own type so callers (and the CLI exit-code mapping) can tell them
// apart without parsing messages.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matsos {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;

    /// Certification stage that raised the error; empty outside certify().
    const std::string& stage() const noexcept { return stage_; }
    void set_stage(std::string stage) { stage_ = std::move(stage); }

private:
    std::string stage_;
};

/// Negative input to a nonnegative-only routine, mismatched dimensions, etc.
class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `position` is a 0-based byte offset into the
/// offending line or expression, `line` is 1-based (0 when not line-oriented).
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t position, std::size_t line = 0)
        : Error(format(message, position, line)), message_(std::move(message)), position_(position), line_(line) {}

    /// The message without the location prefix.
    const std::string& message() const noexcept { return message_; }
    std::size_t position() const noexcept { return position_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string& message, std::size_t position, std::size_t line) {
        std::string out = "parse error";
        if (line != 0) out += " at line " + std::to_string(line);
        out += " (offset " + std::to_string(position) + "): " + message;
        return out;
    }

    std::string message_;
    std::size_t position_;
    std::size_t line_;
};

class UnknownVariable : public ParseError {
public:
    UnknownVariable(const std::string& name, std::size_t position)
        : ParseError("unknown variable '" + name + "'", position), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Krylov minimal polynomial is not squarefree: the matrix cannot be PSD.
class NotDiagonalizable : public Error {
public:
    using Error::Error;
};

/// The minimal polynomial violates the alternating sum-of-squares form.
/// `coefficient` is the index i of the offending a_i (or -1 for the
/// t^2 | p condition); `witness` is a point where a_i < 0, if one was found.
class LemmaViolation : public Error {
public:
    LemmaViolation(std::string message, int coefficient, std::vector<std::string> witness = {})
        : Error(std::move(message)), coefficient_(coefficient), witness_(std::move(witness)) {}

    int coefficient() const noexcept { return coefficient_; }
    const std::vector<std::string>& witness() const noexcept { return witness_; }

private:
    int coefficient_;
    std::vector<std::string> witness_;
};

/// A scalar SOS provider does not apply to its input.
class NotApplicable : public Error {
public:
    using Error::Error;
};

class VerificationFailed : public Error {
public:
    using Error::Error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

class MissingScalarCert : public Error {
public:
    explicit MissingScalarCert(int index)
        : Error("no scalar certificate for a" + std::to_string(index)), index_(index) {}

    int index() const noexcept { return index_; }

private:
    int index_;
};

/// Sampling found a point where a principal minor is negative.
class NotPSD : public Error {
public:
    NotPSD(std::string message, std::vector<std::string> witness, std::vector<std::size_t> minor)
        : Error(std::move(message)), witness_(std::move(witness)), minor_(std::move(minor)) {}

    const std::vector<std::string>& witness() const noexcept { return witness_; }
    /// 0-based row/column indices of the negative principal minor.
    const std::vector<std::size_t>& minor() const noexcept { return minor_; }

private:
    std::vector<std::string> witness_;
    std::vector<std::size_t> minor_;
};

/// The Gram attempt found no certificate. Not a proof that none exists.
class NotFound : public Error {
public:
    using Error::Error;
};

/// Every scalar provider failed. `reasons` pairs provider tags with messages;
/// `index` is the minimal-polynomial coefficient index when known, else -1.
class ScalarSOSUnavailable : public Error {
public:
    using Reasons = std::vector<std::pair<std::string, std::string>>;

    ScalarSOSUnavailable(std::string polynomial, Reasons reasons, int index = -1)
        : Error(format(polynomial, index)),
          polynomial_(std::move(polynomial)),
          reasons_(std::move(reasons)),
          index_(index) {}

    const std::string& polynomial() const noexcept { return polynomial_; }
    const Reasons& reasons() const noexcept { return reasons_; }
    int index() const noexcept { return index_; }

    ScalarSOSUnavailable with_index(int index) const { return ScalarSOSUnavailable(polynomial_, reasons_, index); }

private:
    static std::string format(const std::string& polynomial, int index) {
        std::string who = index >= 0 ? "a" + std::to_string(index) + " = " : std::string();
        return "no sum-of-squares certificate for " + who + polynomial;
    }

    std::string polynomial_;
    Reasons reasons_;
    int index_;
};

}  // namespace matsos
