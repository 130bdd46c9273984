#pragma once

#include "clab/bernoulli.hpp"
#include "clab/rational.hpp"

namespace clab {

/// Exact convolution result; empty windows yield 0 and are flagged so the
/// caller can surface them in reports instead of folding them silently.
struct ConvValue {
    Rational value;
    bool empty = false;
};

/// Sum of D_i D_{m-i} for i in [2, m-2], D_t = B_t/t.
ConvValue conv_divided(const BernoulliCache& cache, long m);

/// Same window with binomial weights C(m, i).
ConvValue conv_divided_binomial(const BernoulliCache& cache, long m);

/// Truncated convolution: sum of D_k D_{order-k} for k in [lo, hi].
ConvValue conv_divided_truncated(const BernoulliCache& cache, long lo, long hi, long order);

/// Cubic convolution: sum of D_i D_j D_k over i+j+k = m with i,j,k >= 2.
ConvValue conv_divided_cubic(const BernoulliCache& cache, long m);

/// Cubic convolution with multinomial weights m!/(i! j! k!).
ConvValue conv_divided_cubic_multinomial(const BernoulliCache& cache, long m);

} // namespace clab
