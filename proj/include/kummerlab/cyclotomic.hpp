#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kummerlab/numtheory.hpp"

namespace kummerlab::cyclo {

using nt::u64;
using nt::u128;

// lambda-adic valuation result. For the mod-p^N tier only valuations below
// prec*(p-1) are exact; beyond that only the lower bound is known.
struct LambdaVal {
    long value = 0;
    bool lower_bound_only = false;
    bool infinite = false;

    bool exact() const { return !lower_bound_only && !infinite; }
};

enum class PrimarityClass { not_semi_primary, semi_primary, primary, hyper_primary };

struct Primarity {
    PrimarityClass cls;
    long valuation;   // v_pi(x - a^p); exact for semi_primary, a lower bound otherwise
    int approximant;  // the rational a in [1, p-1] with x = a mod pi
};

const char* to_string(PrimarityClass c);

// Default working precision: N with N(p-1) >= p+2 (the window in which
// primary and hyper-primary are decidable) plus headroom.
inline int default_precision(int p) {
    return (p + 6 + p - 2) / (p - 1) + 2;
}

// An element of Q(zeta_p) on the power basis 1, zeta, ..., zeta^{p-2},
// with exact rational coefficients. zeta^{p-1} never appears: it is folded
// through 1 + zeta + ... + zeta^{p-1} = 0, so representations are unique
// and equality is coefficient-wise.
class CycNum {
public:
    using Scalar = mpq_class;

    CycNum(int p, std::vector<mpq_class> raw);  // raw has length <= p, basis 1..zeta^{p-1}
    static CycNum zero(int p);
    static CycNum integer(int p, const mpz_class& n);
    static CycNum zeta_power(int p, long k);

    int prime() const { return p_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    CycNum like_integer(const mpz_class& n) const { return integer(p_, n); }
    CycNum like_zeta(long k) const { return zeta_power(p_, k); }

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator-() const;
    bool operator==(const CycNum& o) const;

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_part() const;  // coefficient of 1; call only when is_rational()

    // Galois substitution zeta -> zeta^t for t not divisible by p.
    CycNum substituted(long t) const;

    CycNum inverse() const;
    CycNum pow(const mpz_class& e) const;

    // Product over all p-1 conjugates; always a rational number.
    mpq_class norm() const;

    long trusted_valuation_cap() const { return std::numeric_limits<long>::max(); }
    LambdaVal lambda_valuation() const;
    std::pair<u64, u64> residue_mod_pi2() const;  // coords of 1 and lambda mod p
    u64 residue_mod_pi() const { return residue_mod_pi2().first; }

private:
    CycNum(int p) : p_(p), c_(p - 1) {}
    int p_;
    std::vector<mpq_class> c_;  // length p-1
};

// An element of Z[zeta_p]/p^N on the same basis, coefficients reduced to
// [0, p^N). The representable precision cap is N*(p-1) in lambda-adic terms.
class CycMod {
public:
    using Scalar = u64;

    CycMod(int p, int prec, std::vector<u64> raw);  // raw has length <= p
    static CycMod zero(int p, int prec);
    static CycMod integer(int p, int prec, const mpz_class& n);
    static CycMod zeta_power(int p, int prec, long k);

    int prime() const { return p_; }
    int precision() const { return prec_; }
    u64 modulus() const { return q_; }
    const std::vector<u64>& coeffs() const { return c_; }

    CycMod like_integer(const mpz_class& n) const { return integer(p_, prec_, n); }
    CycMod like_zeta(long k) const { return zeta_power(p_, prec_, k); }

    CycMod operator+(const CycMod& o) const;
    CycMod operator-(const CycMod& o) const;
    CycMod operator*(const CycMod& o) const;
    CycMod operator-() const;
    bool operator==(const CycMod& o) const;

    bool is_zero() const;
    bool is_rational() const;  // all coordinates on zeta^1.. vanish mod p^N
    u64 rational_part() const { return c_[0]; }

    CycMod substituted(long t) const;

    CycMod inverse() const;  // throws std::domain_error on non-units
    CycMod pow(const mpz_class& e) const;

    long trusted_valuation_cap() const { return static_cast<long>(prec_) * (p_ - 1); }
    LambdaVal lambda_valuation() const;
    std::vector<u64> lambda_coords() const;  // coords on 1, lambda, ..., lambda^{p-2}
    std::pair<u64, u64> residue_mod_pi2() const;
    u64 residue_mod_pi() const { return c_sum_mod_p(); }

private:
    CycMod(int p, int prec);
    void check_compatible(const CycMod& o) const;
    u64 c_sum_mod_p() const;
    int p_;
    int prec_;
    u64 q_;
    std::vector<u64> c_;  // length p-1
};

// Reduction Q(zeta) -> Z[zeta]/p^N for p-integral inputs (denominators
// prime to p); a ring homomorphism commuting with substitution.
CycMod reduce(const CycNum& x, int prec);

// Exponent vector e with meaning prod_j sigma^j(x)^{e_j}, sigma: zeta -> zeta^v.
struct GroupRingExp {
    std::vector<mpz_class> exponents;  // length p-1
};

template <class R>
R galois_apply(const R& x, long j, int v) {
    const int p = x.prime();
    long jj = j % (p - 1);
    if (jj < 0) jj += p - 1;
    return x.substituted(static_cast<long>(nt::powmod(static_cast<u64>(v), static_cast<u64>(jj), static_cast<u64>(p))));
}

template <class R>
R groupring_apply(const R& x, const GroupRingExp& e, int v) {
    const int p = x.prime();
    if (e.exponents.size() != static_cast<size_t>(p - 1))
        throw std::invalid_argument("groupring_apply: exponent vector must have length p-1");
    R acc = x.like_integer(1);
    u64 t = 1;
    for (int j = 0; j < p - 1; ++j) {
        if (e.exponents[j] != 0) acc = acc * x.substituted(static_cast<long>(t)).pow(e.exponents[j]);
        t = nt::mulmod(t, static_cast<u64>(v), static_cast<u64>(p));
    }
    return acc;
}

// Semi-primary: congruent to a rational mod pi^2. Primary: to a rational
// p-th power mod pi^p; hyper-primary: mod pi^{p+1}. Requires a pi-unit and,
// in the modular tier, prec*(p-1) >= p+2 so that the p+1 window is decided.
template <class R>
Primarity classify_primarity(const R& x) {
    const int p = x.prime();
    if (x.trusted_valuation_cap() < p + 2)
        throw std::domain_error("classify_primarity: precision too low for the primarity window");
    LambdaVal v0 = x.lambda_valuation();
    if (!v0.exact() || v0.value != 0)
        throw std::domain_error("classify_primarity: input must have lambda-valuation 0");
    auto [d0, d1] = x.residue_mod_pi2();
    int a = static_cast<int>(d0);
    if (d1 != 0) return {PrimarityClass::not_semi_primary, 1, a};
    mpz_class ap;
    mpz_ui_pow_ui(ap.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(p));
    R diff = x - x.like_integer(ap);
    LambdaVal kv = diff.lambda_valuation();
    long k = kv.infinite ? std::numeric_limits<long>::max() : kv.value;
    if (k >= p + 1) return {PrimarityClass::hyper_primary, k, a};
    if (k == p) return {PrimarityClass::primary, k, a};
    return {PrimarityClass::semi_primary, k, a};
}

}  // namespace kummerlab::cyclo
