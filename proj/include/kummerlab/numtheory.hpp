#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace kummerlab::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Residue arithmetic for moduli below 2^63.
inline u64 addmod(u64 a, u64 b, u64 q) {
    u64 s = a + b;
    return s >= q ? s - q : s;
}

inline u64 submod(u64 a, u64 b, u64 q) {
    return a >= b ? a - b : a + (q - b);
}

inline u64 mulmod(u64 a, u64 b, u64 q) {
    return static_cast<u64>(static_cast<u128>(a) * b % q);
}

inline u64 powmod(u64 a, u64 e, u64 q) {
    u64 r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1) r = mulmod(r, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return r;
}

// powmod with an arbitrary-size exponent; e < 0 requires gcd(a, q) = 1.
u64 powmod(u64 a, const mpz_class& e, u64 q);

// Modular inverse; throws std::domain_error when gcd(a, q) != 1.
u64 invmod(u64 a, u64 q);

bool is_prime(u64 n);

std::vector<u64> distinct_prime_factors(u64 n);

bool is_primitive_root(u64 v, u64 p);

// Smallest positive primitive root mod an odd prime p.
int least_primitive_root(u64 p);

// Order of a in (Z/p)^*; brute-force product chain.
long multiplicative_order(u64 a, u64 p);

// Smallest n >= 0 with base^n = a mod p, or -1.
long discrete_log(u64 a, u64 base, u64 p);

// base^exp, throwing std::overflow_error when the result would reach limit.
u64 pow_checked(u64 base, int exp, u64 limit);

}  // namespace kummerlab::nt
