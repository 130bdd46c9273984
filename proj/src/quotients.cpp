#include "clab/quotients.hpp"

#include "clab/errors.hpp"

namespace clab {

Int fermat_quotient(long p, long a) {
    if (a < 1 || a > p - 1) throw BaseOutOfRangeError("fermat_quotient: base out of [1, p-1]");
    Int num = pow_int(a, static_cast<unsigned long>(p - 1)) - 1;
    return num / p;
}

Int wilson_quotient(long p) {
    Int num = factorial(static_cast<unsigned long>(p - 1)) + 1;
    return num / p;
}

Int power_sum(long m, long n) {
    if (m < 0 || n < 1) throw Error("power_sum: need m >= 0, n >= 1");
    Int s = 0;
    for (long x = 1; x < n; ++x) s += pow_int(x, static_cast<unsigned long>(m));
    return s;
}

PadicResidue power_sum_mod(long p, long m, long n, int K) {
    PadicResidue s(p, K, 0);
    const Int mod = pow_int(p, static_cast<unsigned long>(K));
    Int acc = 0;
    const Int e(m);
    for (long x = 1; x < n; ++x) {
        Int t;
        Int base(x);
        mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
        acc += t;
    }
    return PadicResidue(p, K, acc);
}

QuotientTable::QuotientTable(long p) : prime(p) {
    q.resize(static_cast<size_t>(p));
    for (long a = 1; a < p; ++a) q[static_cast<size_t>(a)] = fermat_quotient(p, a);
    wilson = wilson_quotient(p);
}

const Int& QuotientTable::at(long a) const {
    if (a < 1 || a >= prime) throw BaseOutOfRangeError("QuotientTable: base out of range");
    return q[static_cast<size_t>(a)];
}

PadicResidue weighted_power_sum(const QuotientTable& table, long t, int m, int K) {
    if (m < 0 || m > 3) throw Error("weighted_power_sum: quotient power must be in {0,1,2,3}");
    const long p = table.prime;
    const Int mod = pow_int(p, static_cast<unsigned long>(K));
    Int acc = 0;
    for (long a = 1; a < p; ++a) {
        Int term = 1;
        for (int j = 0; j < m; ++j) term *= table.at(a);
        mpz_fdiv_r(term.get_mpz_t(), term.get_mpz_t(), mod.get_mpz_t());
        Int apow;
        Int base(a);
        if (t >= 0) {
            Int e(t);
            mpz_powm(apow.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
        } else {
            Int inv;
            mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
            Int e(-t);
            mpz_powm(apow.get_mpz_t(), inv.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
        }
        acc += term * apow;
    }
    return PadicResidue(p, K, acc);
}

} // namespace clab
