#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace continuum {

/// Base of every domain error raised by the library. `name()` is the stable,
/// machine-parsable identifier the CLI prints on failure.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* name() const noexcept = 0;
};

/// A rational outside [0, 1] was used as a point of the unit interval.
class OutOfRange : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "OutOfRange"; }
};

/// A map was applied outside its domain, e.g. the forward shift on a B_S stream.
class DomainViolation : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "DomainViolation"; }
};

/// An enumeration would exceed the configured item cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "BudgetExceeded"; }
};

/// Malformed stream literal or rational text. `position()` is the 0-based
/// offset of the first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    const char* name() const noexcept override { return "ParseError"; }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Two sets handed to a strict disjoint union share labels.
class DisjointnessViolation : public Error {
public:
    explicit DisjointnessViolation(std::vector<std::string> common)
        : Error(describe(common)), common_(std::move(common)) {}
    const char* name() const noexcept override { return "DisjointnessViolation"; }
    /// The shared labels, in the left operand's order.
    const std::vector<std::string>& common() const noexcept { return common_; }

private:
    static std::string describe(const std::vector<std::string>& common) {
        std::string text = "sets are not disjoint; common labels:";
        for (const auto& label : common) text += " " + label;
        return text;
    }
    std::vector<std::string> common_;
};

} // namespace continuum
