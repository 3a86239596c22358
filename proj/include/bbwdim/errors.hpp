#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bbwdim {

/// Base class of every domain error thrown by this library.
struct Error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A sequence that must be nonincreasing increases at `position` (0-based).
struct NotNonincreasing : Error {
    std::size_t position;
    explicit NotNonincreasing(std::size_t pos)
        : Error("sequence increases at position " + std::to_string(pos)), position(pos) {}
};

/// Ambient rank m is smaller than the weight length k.
struct MTooSmall : Error {
    MTooSmall(std::size_t m, std::size_t k)
        : Error("m = " + std::to_string(m) + " is smaller than the weight length k = " +
                std::to_string(k)) {}
};

/// The lowest weight entry is negative where a section computation was requested.
struct NegativeLowestEntry : Error {
    NegativeLowestEntry()
        : Error("lowest weight entry is negative; use the cohomology routines") {}
};

/// A raw sequence handed to the Weyl product is not dominant.
struct NotDominant : Error {
    std::size_t position;
    explicit NotDominant(std::size_t pos)
        : Error("weight is not dominant: increases at position " + std::to_string(pos)),
          position(pos) {}
};

/// A vanishing threshold was requested for a weight whose lowest entry is nonnegative.
struct NotNegative : Error {
    NotNegative() : Error("lowest weight entry is nonnegative; no vanishing threshold") {}
};

struct BadRange : Error {
    explicit BadRange(const std::string& what) : Error("parameter out of range: " + what) {}
};

/// Negative determinant twists of tensor powers are rejected, not computed.
struct NegativeTwistUnsupported : Error {
    NegativeTwistUnsupported()
        : Error("negative determinant twist of a tensor power is not supported") {}
};

/// An enumeration oracle would exceed its budget. Oracles fail loudly, never truncate.
struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error("enumeration budget exceeded: " + what) {}
};

}  // namespace bbwdim
