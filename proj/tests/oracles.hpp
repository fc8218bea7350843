#pragma once

// Independent reference computations used only by tests. These stay away
// from the library's production code paths on purpose: the recurrences and
// brute-force loops here are slow but easy to trust.

#include <vector>

#include <gmpxx.h>

#include "kummerlab/cyclotomic.hpp"

namespace oracles {

// B_0..B_nmax as exact rationals from sum_{j<=n} C(n+1,j) B_j = 0.
inline std::vector<mpq_class> bernoulli_exact(int nmax) {
    std::vector<mpq_class> b(nmax + 1);
    b[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        mpq_class s(0);
        mpz_class binom;
        for (int j = 0; j < n; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), n + 1, j);
            s += mpq_class(binom) * b[j];
        }
        b[n] = -s / (n + 1);
    }
    return b;
}

// Residue of an exact rational mod p; denominator must be prime to p.
inline unsigned long rational_mod(const mpq_class& x, unsigned long p) {
    mpz_class num = x.get_num() % static_cast<long>(p);
    if (num < 0) num += static_cast<long>(p);
    mpz_class den = x.get_den() % static_cast<long>(p);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t()) == 0)
        throw std::domain_error("rational_mod: denominator divisible by p");
    return mpz_class(num * inv % static_cast<long>(p)).get_ui();
}

// Order of a mod p by repeated multiplication.
inline long order_brute(unsigned long a, unsigned long p) {
    unsigned long x = a % p;
    long n = 1;
    while (x != 1) {
        x = (x * a) % p;
        ++n;
    }
    return n;
}

// Valuation by literal repeated division by lambda = zeta - 1, stopping as
// soon as the quotient leaves Z[zeta].
inline long lambda_valuation_by_division(kummerlab::cyclo::CycNum x) {
    using kummerlab::cyclo::CycNum;
    const int p = x.prime();
    // p = (1 - zeta) * prod_{j=2}^{p-1} (1 - zeta^j), so
    // lambda^{-1} = -(1/p) prod_{j=2}^{p-1} (1 - zeta^j)
    CycNum prod = CycNum::integer(p, 1);
    for (int j = 2; j < p; ++j)
        prod = prod * (CycNum::integer(p, 1) - CycNum::zeta_power(p, j));
    std::vector<mpq_class> c = prod.coeffs();
    for (auto& q : c) q /= -p;
    c.resize(p, mpq_class(0));
    CycNum lambda_inv(p, c);
    auto integral = [](const CycNum& y) {
        for (const auto& q : y.coeffs())
            if (q.get_den() != 1) return false;
        return true;
    };
    long v = 0;
    while (!x.is_zero()) {
        CycNum y = x * lambda_inv;
        if (!integral(y)) break;
        x = y;
        ++v;
    }
    return v;
}

}  // namespace oracles
