#pragma once

#include <stdexcept>
#include <string>

namespace clab {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value with p in its denominator was reduced without a compensating
/// power of p (e.g. a divided Bernoulli number at a von Staudt-Clausen pole).
struct NonIntegralError : Error {
    using Error::Error;
};

/// Inversion of a residue divisible by p.
struct NotAUnitError : Error {
    using Error::Error;
};

/// A digit beyond the stored precision was requested, or an operation lost
/// more precision than the computation budgeted for.
struct PrecisionError : Error {
    using Error::Error;
};

/// A difference that Kummer's congruence forces to vanish mod p did not.
/// Indicates an arithmetic bug, never expected on valid inputs.
struct KummerViolationError : Error {
    using Error::Error;
};

struct BaseOutOfRangeError : Error {
    using Error::Error;
};

/// Newton lifting was attempted at a point where the derivative is not a unit.
struct NotSimpleRootError : Error {
    using Error::Error;
};

/// A convolution was requested with an invalid index window.
struct WindowError : Error {
    using Error::Error;
};

/// Parameters outside the hypotheses of the congruence being evaluated.
struct HypothesisError : Error {
    using Error::Error;
};

} // namespace clab
