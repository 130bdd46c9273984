#pragma once

#include <limits>

#include "clab/errors.hpp"
#include "clab/rational.hpp"

namespace clab {

/// p-adic valuation of a rational; +infinity for zero.
struct Valuation {
    long v = 0;
    bool infinite = false;

    static Valuation inf() { return Valuation{0, true}; }
    bool operator==(const Valuation&) const = default;
    bool at_least(long k) const { return infinite || v >= k; }
};

Valuation valuation(const Rational& x, long p);

/// An element of Z/p^K with its prime and precision attached.
/// Arithmetic is closed at fixed (p, K); mixing parameters throws.
class PadicResidue {
  public:
    PadicResidue(long prime, int precision, Int value);

    long prime() const { return prime_; }
    int precision() const { return precision_; }
    const Int& value() const { return value_; }
    const Int& modulus() const { return modulus_; }

    PadicResidue operator+(const PadicResidue& o) const;
    PadicResidue operator-(const PadicResidue& o) const;
    PadicResidue operator*(const PadicResidue& o) const;
    PadicResidue operator-() const;

    /// Multiplicative inverse; the value must be a unit (p does not divide it).
    PadicResidue inverse() const;
    PadicResidue pow(const Int& e) const;

    /// Coefficient of p^i in the canonical expansion, digits in [0, p).
    long digit(int i) const;

    /// The same residue viewed at a lower precision k <= K.
    PadicResidue truncated(int k) const;

    bool operator==(const PadicResidue& o) const {
        return prime_ == o.prime_ && precision_ == o.precision_ && value_ == o.value_;
    }

  private:
    void check_compatible(const PadicResidue& o) const;

    long prime_;
    int precision_;
    Int modulus_;
    Int value_; // in [0, p^K)
};

/// a^{-1} mod p^K. Throws NotAUnitError if p | a.
PadicResidue mod_inverse(const Int& a, long p, int K);

/// Canonical residue of a p-integral rational mod p^K (denominator inverted
/// mod p^K). Throws NonIntegralError if p divides the denominator.
PadicResidue reduce_mod(const Rational& x, long p, int K);

/// Hensel digit (coefficient of p^i) of a p-integral rational.
long hensel_digit(const Rational& x, long p, int i);
long hensel_digit(const PadicResidue& x, int i);

/// An element of Q_p held to finite absolute precision: the value is known
/// modulo p^{abs_prec}. Internally stored as unit * p^val with the unit kept
/// modulo p^{abs_prec - val}. Negative valuations (simple poles and worse)
/// are representable; precision is tracked through arithmetic so a digit can
/// never be extracted from noise. This is working machinery for congruence
/// evaluation; the canonical public residue type stays PadicResidue.
class PadicNumber {
  public:
    /// Exact rational input: known to every precision, so any abs_prec is fine.
    static PadicNumber from_rational(const Rational& x, long p, int abs_prec);
    static PadicNumber from_int(const Int& x, long p, int abs_prec);
    static PadicNumber zero(long p, int abs_prec);

    long prime() const { return prime_; }
    /// Value is known modulo p^{abs_prec()}.
    int abs_prec() const { return abs_prec_; }
    bool known_zero() const { return zero_; }
    /// Valuation; meaningless for a value that is zero to stated precision.
    long val() const { return val_; }

    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator-() const;
    PadicNumber inverse() const;

    /// Multiplies by p^k (k may be negative); exact, shifts precision window.
    PadicNumber shifted(long k) const;

    /// True if the value vanishes modulo p^k. Throws PrecisionError when the
    /// stored precision cannot support the claim.
    bool is_zero_mod(int k) const;

    /// Canonical residue in [0, p^k); requires a p-integral value and
    /// sufficient stored precision.
    Int residue(int k) const;

    /// Hensel digit (x)_i in [0, p).
    long digit(long i) const;

  private:
    PadicNumber() = default;

    long prime_ = 0;
    long val_ = 0;     // valuation of the unit representation
    int abs_prec_ = 0; // value known mod p^{abs_prec_}
    Int unit_;         // in [0, p^{abs_prec_ - val_}), not divisible by p
    bool zero_ = false;
};

} // namespace clab
