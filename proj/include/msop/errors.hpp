#pragma once

#include <stdexcept>
#include <string>

namespace msop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter bundle or argument is outside its admissible range.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// An exact inner product or norm was requested with a non-integer gamma,
/// which would require the irrational factor (1-mu)^gamma.
class NonIntegerGammaExactPath : public Error {
public:
    NonIntegerGammaExactPath()
        : Error("exact path requires an integer gamma; use the numeric fallback") {}
};

/// Christoffel-Darboux quotient evaluated on the diagonal x == y.
class ConfluentPoint : public Error {
public:
    ConfluentPoint() : Error("Christoffel-Darboux form is undefined at x == y") {}
};

/// A bracket <x-alpha>_i^{j+1} vanishes at the evaluation point.
class BracketPole : public Error {
public:
    using Error::Error;
};

class DivergentParameters : public Error {
public:
    using Error::Error;
};

class InvalidC : public Error {
public:
    using Error::Error;
};

/// The 3F2 representation has a vanishing denominator at this point.
class DegenerateRepresentation : public Error {
public:
    using Error::Error;
};

class PoleAtNonnegativeInteger : public Error {
public:
    using Error::Error;
};

/// Asymptotic results are only available for the forward operator at alpha = 0.
class UnsupportedRegime : public Error {
public:
    using Error::Error;
};

} // namespace msop
