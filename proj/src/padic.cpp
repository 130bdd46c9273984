#include "clab/padic.hpp"

namespace clab {

Valuation valuation(const Rational& x, long p) {
    if (x == 0) return Valuation::inf();
    long vn = int_valuation(x.get_num(), p);
    long vd = int_valuation(x.get_den(), p);
    return Valuation{vn - vd, false};
}

PadicResidue::PadicResidue(long prime, int precision, Int value)
    : prime_(prime), precision_(precision) {
    if (prime < 2) throw Error("PadicResidue: prime must be >= 2");
    if (precision < 1) throw Error("PadicResidue: precision must be >= 1");
    modulus_ = pow_int(prime, static_cast<unsigned long>(precision));
    mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

void PadicResidue::check_compatible(const PadicResidue& o) const {
    if (prime_ != o.prime_ || precision_ != o.precision_)
        throw Error("PadicResidue: mixed (p, K) arithmetic");
}

PadicResidue PadicResidue::operator+(const PadicResidue& o) const {
    check_compatible(o);
    return PadicResidue(prime_, precision_, value_ + o.value_);
}

PadicResidue PadicResidue::operator-(const PadicResidue& o) const {
    check_compatible(o);
    return PadicResidue(prime_, precision_, value_ - o.value_);
}

PadicResidue PadicResidue::operator*(const PadicResidue& o) const {
    check_compatible(o);
    return PadicResidue(prime_, precision_, value_ * o.value_);
}

PadicResidue PadicResidue::operator-() const {
    return PadicResidue(prime_, precision_, -value_);
}

PadicResidue PadicResidue::inverse() const {
    if (mpz_divisible_ui_p(value_.get_mpz_t(), static_cast<unsigned long>(prime_)))
        throw NotAUnitError("inverse of a residue divisible by p");
    Int r;
    if (!mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t()))
        throw NotAUnitError("residue not invertible");
    return PadicResidue(prime_, precision_, r);
}

PadicResidue PadicResidue::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    Int r;
    mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), e.get_mpz_t(), modulus_.get_mpz_t());
    return PadicResidue(prime_, precision_, r);
}

long PadicResidue::digit(int i) const {
    if (i < 0 || i >= precision_)
        throw PrecisionError("digit index beyond residue precision");
    Int q = value_ / pow_int(prime_, static_cast<unsigned long>(i));
    Int d;
    mpz_fdiv_r_ui(d.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(prime_));
    return d.get_si();
}

PadicResidue PadicResidue::truncated(int k) const {
    if (k < 1 || k > precision_) throw PrecisionError("invalid truncation precision");
    return PadicResidue(prime_, k, value_);
}

PadicResidue mod_inverse(const Int& a, long p, int K) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p)))
        throw NotAUnitError("mod_inverse: argument divisible by p");
    return PadicResidue(p, K, a).inverse();
}

PadicResidue reduce_mod(const Rational& x, long p, int K) {
    if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
        throw NonIntegralError("reduce_mod: denominator divisible by p");
    PadicResidue num(p, K, x.get_num());
    if (x.get_den() == 1) return num;
    return num * mod_inverse(x.get_den(), p, K).truncated(K);
}

long hensel_digit(const Rational& x, long p, int i) {
    if (i < 0) throw PrecisionError("negative digit index");
    Valuation v = valuation(x, p);
    if (v.infinite) return 0;
    if (v.v < 0) throw NonIntegralError("hensel_digit of a non p-integral value");
    if (v.v > i) return 0;
    return reduce_mod(x, p, i + 1).digit(i);
}

long hensel_digit(const PadicResidue& x, int i) { return x.digit(i); }

// --- PadicNumber -----------------------------------------------------------

PadicNumber PadicNumber::zero(long p, int abs_prec) {
    PadicNumber r;
    r.prime_ = p;
    r.abs_prec_ = abs_prec;
    r.zero_ = true;
    r.unit_ = 0;
    r.val_ = 0;
    return r;
}

PadicNumber PadicNumber::from_rational(const Rational& x, long p, int abs_prec) {
    if (x == 0) return zero(p, abs_prec);
    PadicNumber r;
    r.prime_ = p;
    r.abs_prec_ = abs_prec;
    long vn = int_valuation(x.get_num(), p);
    long vd = int_valuation(x.get_den(), p);
    r.val_ = vn - vd;
    long rel = abs_prec - r.val_;
    if (rel <= 0) return zero(p, abs_prec);
    Int num = x.get_num() / pow_int(p, static_cast<unsigned long>(vn));
    Int den = x.get_den() / pow_int(p, static_cast<unsigned long>(vd));
    Int mod = pow_int(p, static_cast<unsigned long>(rel));
    Int inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    Int u = num * inv;
    mpz_fdiv_r(r.unit_.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    return r;
}

PadicNumber PadicNumber::from_int(const Int& x, long p, int abs_prec) {
    return from_rational(Rational(x), p, abs_prec);
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    PadicNumber r = *this;
    Int mod = pow_int(prime_, static_cast<unsigned long>(abs_prec_ - val_));
    r.unit_ = mod - unit_;
    mpz_fdiv_r(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), mod.get_mpz_t());
    return r;
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (prime_ != o.prime_) throw Error("PadicNumber: mixed primes");
    int abs = std::min(abs_prec_, o.abs_prec_);
    if (zero_ && o.zero_) return zero(prime_, abs);
    if (zero_ || o.zero_) {
        const PadicNumber& nz = zero_ ? o : *this;
        PadicNumber r = nz;
        r.abs_prec_ = abs;
        long rel = abs - r.val_;
        if (rel <= 0) return zero(prime_, abs);
        Int mod = pow_int(prime_, static_cast<unsigned long>(rel));
        mpz_fdiv_r(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), mod.get_mpz_t());
        return r;
    }
    long m = std::min(val_, o.val_);
    long rel = abs - m;
    if (rel <= 0) return zero(prime_, abs);
    Int mod = pow_int(prime_, static_cast<unsigned long>(rel));
    Int u = unit_ * pow_int(prime_, static_cast<unsigned long>(val_ - m)) +
            o.unit_ * pow_int(prime_, static_cast<unsigned long>(o.val_ - m));
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    if (u == 0) return zero(prime_, abs);
    long w = int_valuation(u, prime_);
    PadicNumber r;
    r.prime_ = prime_;
    r.abs_prec_ = abs;
    r.val_ = m + w;
    r.unit_ = u / pow_int(prime_, static_cast<unsigned long>(w));
    return r;
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (prime_ != o.prime_) throw Error("PadicNumber: mixed primes");
    if (zero_ || o.zero_) {
        // zero to precision z times a value of valuation v is zero mod p^{z+v}
        long za = zero_ ? abs_prec_ : val_;
        long zb = o.zero_ ? o.abs_prec_ : o.val_;
        long abs = za + zb;
        if (abs > std::max(abs_prec_, o.abs_prec_) + 64) abs = std::max(abs_prec_, o.abs_prec_) + 64;
        return zero(prime_, static_cast<int>(abs));
    }
    long rel = std::min<long>(abs_prec_ - val_, o.abs_prec_ - o.val_);
    PadicNumber r;
    r.prime_ = prime_;
    r.val_ = val_ + o.val_;
    r.abs_prec_ = static_cast<int>(r.val_ + rel);
    Int mod = pow_int(prime_, static_cast<unsigned long>(rel));
    Int u = unit_ * o.unit_;
    mpz_fdiv_r(r.unit_.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    return r;
}

PadicNumber PadicNumber::inverse() const {
    if (zero_) throw NotAUnitError("inverse of a value that is zero to precision");
    long rel = abs_prec_ - val_;
    PadicNumber r;
    r.prime_ = prime_;
    r.val_ = -val_;
    r.abs_prec_ = static_cast<int>(r.val_ + rel);
    Int mod = pow_int(prime_, static_cast<unsigned long>(rel));
    if (!mpz_invert(r.unit_.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t()))
        throw NotAUnitError("PadicNumber: unit not invertible");
    return r;
}

PadicNumber PadicNumber::shifted(long k) const {
    PadicNumber r = *this;
    r.abs_prec_ = static_cast<int>(r.abs_prec_ + k);
    if (!zero_) r.val_ += k;
    return r;
}

bool PadicNumber::is_zero_mod(int k) const {
    if (zero_) {
        if (abs_prec_ < k) throw PrecisionError("is_zero_mod: insufficient precision");
        return true;
    }
    if (val_ >= k) return true;
    if (abs_prec_ < k) throw PrecisionError("is_zero_mod: insufficient precision");
    return false;
}

Int PadicNumber::residue(int k) const {
    if (zero_) {
        if (abs_prec_ < k) throw PrecisionError("residue: insufficient precision");
        return Int(0);
    }
    if (val_ < 0) throw NonIntegralError("residue of a value with a pole");
    if (abs_prec_ < k) throw PrecisionError("residue: insufficient precision");
    if (val_ >= k) return Int(0);
    Int mod = pow_int(prime_, static_cast<unsigned long>(k));
    Int v = unit_ * pow_int(prime_, static_cast<unsigned long>(val_));
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    return v;
}

long PadicNumber::digit(long i) const {
    if (i < 0) throw NonIntegralError("digit at negative index");
    if (zero_) {
        if (abs_prec_ <= i) throw PrecisionError("digit: insufficient precision");
        return 0;
    }
    if (val_ < 0) throw NonIntegralError("digit of a value with a pole");
    if (abs_prec_ <= i) throw PrecisionError("digit: insufficient precision");
    if (i < val_) return 0;
    Int q = unit_ / pow_int(prime_, static_cast<unsigned long>(i - val_));
    Int d;
    mpz_fdiv_r_ui(d.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(prime_));
    return d.get_si();
}

} // namespace clab
