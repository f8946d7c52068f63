#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace finring {

/// Base class for every error this library reports on bad input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A ring/group axiom failed during exhaustive validation.
/// Carries the axiom name and the first witness tuple in scan order.
struct AxiomViolation : Error {
    std::string axiom;
    std::array<std::int64_t, 3> witness;

    AxiomViolation(std::string axiom_name, std::array<std::int64_t, 3> w)
        : Error("axiom violation: " + axiom_name + " at witness (" + std::to_string(w[0]) + "," +
                std::to_string(w[1]) + "," + std::to_string(w[2]) + ")"),
          axiom(std::move(axiom_name)),
          witness(w) {}
};

struct BimoduleAxiomViolation : Error {
    using Error::Error;
};

struct ContextAxiomViolation : Error {
    using Error::Error;
};

/// Two routes that must agree by a proved theorem disagreed.
/// This always indicates a bug in the library, never bad user input.
struct InternalInconsistency : Error {
    using Error::Error;
};

/// A ring-class predicate was asked about the zero ring (size 1).
struct DegenerateRing : Error {
    DegenerateRing() : Error("degenerate ring: the zero ring is excluded from analysis") {}
    using Error::Error;
};

/// A construction would exceed the configured carrier cap.
struct CapExceeded : Error {
    using Error::Error;
};

struct NotAnIdeal : Error {
    using Error::Error;
};

struct NotIdempotent : Error {
    using Error::Error;
};

struct NotPrime : Error {
    using Error::Error;
};

struct NotCommutative : Error {
    using Error::Error;
};

struct NotMonic : Error {
    using Error::Error;
};

struct NotAGroup : Error {
    using Error::Error;
};

/// DSL parse failure with 1-based position and what was expected there.
struct SyntaxError : Error {
    int line;
    int col;
    std::string expected;

    SyntaxError(int line_, int col_, std::string expected_)
        : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": expected " + expected_),
          line(line_),
          col(col_),
          expected(std::move(expected_)) {}
};

/// Malformed table/manifest/context file; carries a 1-based line number.
struct FileFormatError : Error {
    int line;

    FileFormatError(std::string path, int line_, const std::string& what_)
        : Error(path + ":" + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace finring
