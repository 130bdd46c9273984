#include "clab/convolutions.hpp"

#include "clab/errors.hpp"

namespace clab {

ConvValue conv_divided(const BernoulliCache& cache, long m) {
    if (m < 2) throw WindowError("conv_divided: order must be >= 2");
    ConvValue out;
    if (m - 2 < 2) {
        out.empty = true;
        return out;
    }
    for (long i = 2; i <= m - 2; i += 2)
        out.value += Rational(cache.divided(i) * cache.divided(m - i));
    return out;
}

ConvValue conv_divided_binomial(const BernoulliCache& cache, long m) {
    if (m < 2) throw WindowError("conv_divided_binomial: order must be >= 2");
    ConvValue out;
    if (m - 2 < 2) {
        out.empty = true;
        return out;
    }
    for (long i = 2; i <= m - 2; i += 2)
        out.value += Rational(Rational(binomial(static_cast<unsigned long>(m),
                                                static_cast<unsigned long>(i))) *
                              cache.divided(i) * cache.divided(m - i));
    return out;
}

ConvValue conv_divided_truncated(const BernoulliCache& cache, long lo, long hi, long order) {
    ConvValue out;
    if (lo > hi) {
        out.empty = true;
        return out;
    }
    if (lo < 1 || order - hi < 1) throw WindowError("conv_divided_truncated: window out of range");
    for (long k = lo; k <= hi; ++k) {
        if (k % 2 != 0 && k != 1) continue; // odd divided Bernoulli numbers >= 3 vanish
        out.value += Rational(cache.divided(k) * cache.divided(order - k));
    }
    return out;
}

ConvValue conv_divided_cubic(const BernoulliCache& cache, long m) {
    ConvValue out;
    if (m < 6) {
        out.empty = true;
        return out;
    }
    for (long i = 2; i <= m - 4; i += 2) {
        const Rational& di = cache.divided(i);
        for (long j = 2; j <= m - i - 2; j += 2) {
            long k = m - i - j;
            if (k < 2) continue;
            out.value += Rational(di * cache.divided(j) * cache.divided(k));
        }
    }
    return out;
}

ConvValue conv_divided_cubic_multinomial(const BernoulliCache& cache, long m) {
    ConvValue out;
    if (m < 6) {
        out.empty = true;
        return out;
    }
    for (long i = 2; i <= m - 4; i += 2) {
        const Rational& di = cache.divided(i);
        Int bi = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(i));
        for (long j = 2; j <= m - i - 2; j += 2) {
            long k = m - i - j;
            if (k < 2) continue;
            Int coeff = bi * binomial(static_cast<unsigned long>(m - i),
                                      static_cast<unsigned long>(j));
            out.value += Rational(Rational(coeff) * di * cache.divided(j) * cache.divided(k));
        }
    }
    return out;
}

} // namespace clab
