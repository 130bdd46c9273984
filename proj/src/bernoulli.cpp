#include "clab/bernoulli.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "clab/errors.hpp"

namespace clab {

namespace {

// Tangent numbers T_1..T_m via the Knuth-Buckholtz triangle; all integer.
std::vector<Int> tangent_numbers(long m) {
    std::vector<Int> t(static_cast<size_t>(m) + 1);
    if (m >= 1) t[1] = 1;
    for (long k = 2; k <= m; ++k) t[k] = (k - 1) * t[k - 1];
    for (long k = 2; k <= m; ++k)
        for (long j = k; j <= m; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    return t;
}

} // namespace

void BernoulliCache::build(long max_index) {
    if (max_index < 0) throw Error("BernoulliCache: negative index");
    table_.assign(static_cast<size_t>(max_index) + 1, Rational(0));
    divided_.assign(static_cast<size_t>(max_index) + 1, Rational(0));
    table_[0] = 1;
    if (max_index >= 1) table_[1] = make_rational(-1, 2);
    long m = max_index / 2;
    std::vector<Int> t = tangent_numbers(m);
    for (long n = 1; n <= m; ++n) {
        // B_{2n} = (-1)^{n-1} * 2n * T_n / (4^n (4^n - 1))
        Int four_n = pow_int(4, static_cast<unsigned long>(n));
        Int num = 2 * n * t[n];
        if (n % 2 == 0) num = -num;
        table_[2 * n] = make_rational(num, four_n * (four_n - 1));
    }
    for (long n = 1; n <= max_index; ++n)
        divided_[n] = Rational(table_[n] / n);
}

BernoulliCache::BernoulliCache(long max_index) { build(max_index); }

const Rational& BernoulliCache::bernoulli(long n) const {
    if (n < 0 || n > max_index()) throw Error("BernoulliCache: index out of range");
    return table_[static_cast<size_t>(n)];
}

const Rational& BernoulliCache::divided(long t) const {
    if (t < 1 || t > max_index()) throw Error("BernoulliCache: divided index out of range");
    return divided_[static_cast<size_t>(t)];
}

void BernoulliCache::dump(std::ostream& os) const {
    for (long n = 0; n <= max_index(); ++n) {
        const Rational& b = table_[static_cast<size_t>(n)];
        os << n << ' ' << b.get_num().get_str() << '/' << b.get_den().get_str() << '\n';
    }
}

BernoulliCache BernoulliCache::load(std::istream& is, long max_index) {
    std::vector<Rational> loaded(static_cast<size_t>(max_index) + 1, Rational(0));
    std::vector<bool> seen(static_cast<size_t>(max_index) + 1, false);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long n;
        std::string frac;
        if (!(ls >> n >> frac)) throw Error("Bernoulli cache file: malformed line: " + line);
        auto slash = frac.find('/');
        if (slash == std::string::npos) throw Error("Bernoulli cache file: missing '/'");
        Int num(frac.substr(0, slash)), den(frac.substr(slash + 1));
        if (den <= 0) throw Error("Bernoulli cache file: non-positive denominator");
        if (n < 0) throw Error("Bernoulli cache file: negative index");
        if (n <= max_index) {
            loaded[static_cast<size_t>(n)] = make_rational(num, den);
            seen[static_cast<size_t>(n)] = true;
        }
    }
    for (long n = 0; n <= max_index; ++n)
        if (!seen[static_cast<size_t>(n)])
            throw Error("Bernoulli cache file: missing index " + std::to_string(n));
    BernoulliCache cache;
    cache.table_ = std::move(loaded);
    cache.divided_.assign(cache.table_.size(), Rational(0));
    for (long n = 1; n <= max_index; ++n)
        cache.divided_[static_cast<size_t>(n)] = Rational(cache.table_[static_cast<size_t>(n)] / n);
    return cache;
}

long em_residue(const BernoulliCache& cache, long p, long i) {
    if (i < 2 || i > p - 3 || i % 2 != 0)
        throw HypothesisError("em_residue: index must be even in [2, p-3]");
    Rational diff = cache.divided(p - 1 + i) - cache.divided(i);
    if (!valuation(diff, p).at_least(1))
        throw KummerViolationError("Kummer congruence failed for i=" + std::to_string(i));
    return hensel_digit(diff, p, 1);
}

long EMResidueTable::at(long i) const {
    if (i < 2 || i > prime - 3 || i % 2 != 0)
        throw HypothesisError("EMResidueTable: index must be even in [2, p-3]");
    return digits[static_cast<size_t>(i / 2 - 1)];
}

EMResidueTable build_em_table(const BernoulliCache& cache, long p) {
    EMResidueTable t;
    t.prime = p;
    for (long i = 2; i <= p - 3; i += 2) t.digits.push_back(em_residue(cache, p, i));
    return t;
}

Rational agoh_giuga_exact(const BernoulliCache& cache, long p) {
    Rational q = (1 + p * cache.bernoulli(p - 1)) / p;
    if (!valuation(q, p).at_least(0))
        throw NonIntegralError("Agoh-Giuga quotient not p-integral: p B_{p-1} != -1 mod p");
    return q;
}

PadicResidue agoh_giuga(const BernoulliCache& cache, long p, int K) {
    return reduce_mod(agoh_giuga_exact(cache, p), p, K);
}

Int von_staudt_clausen_denominator(long n) {
    Int d = 1;
    for (long q = 2; q <= n + 1; ++q)
        if (is_prime(q) && n % (q - 1) == 0) d *= q;
    return d;
}

} // namespace clab
