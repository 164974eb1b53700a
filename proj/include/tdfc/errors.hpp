#pragma once

#include <stdexcept>
#include <string>

namespace tdfc {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

/// An Entangle op touched a slot that is not excited at application time.
struct EntangleUnexcited : Error {
    using Error::Error;
};

struct InvalidPermutation : Error {
    using Error::Error;
};

struct InvalidSpec : Error {
    using Error::Error;
};

struct Overflow : Error {
    using Error::Error;
};

/// Lattice embedding rejected: capacity bound violated or search exhausted.
/// `capacity_bound` distinguishes the two causes.
struct EmbeddingInfeasible : Error {
    bool capacity_bound;
    EmbeddingInfeasible(const std::string& msg, bool capacity)
        : Error(msg), capacity_bound(capacity) {}
};

/// Tableau canonicalization did not produce a graph-state form.
struct NotGraphState : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

/// Emulator: a block's gate mask references a vacuum slot.
struct MaskViolation : Error {
    using Error::Error;
};

/// Emulator: hardware block list does not match the schedule's blocks.
struct DelayMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace tdfc
