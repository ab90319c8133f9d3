#pragma once

#include <stdexcept>
#include <string>

namespace pdmosc {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (x <= -1/gamma, x <= 0 for lnGamma, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Non-oscillatory regime: gamma^2 A^2 >= 1 or the coherent analogue.
class RegimeError : public Error {
public:
    using Error::Error;
};

// Level index above the bound-state range.
class BoundIndexError : public Error {
public:
    using Error::Error;
};

// s <= 1/2: not even the ground state is bound.
class NoBoundStateError : public Error {
public:
    using Error::Error;
};

// Grid too coarse, not uniform, mismatched, or density not vanishing at the edge.
class GridError : public Error {
public:
    using Error::Error;
};

class ConventionError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

} // namespace pdmosc
