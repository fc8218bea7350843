#pragma once

#include <cstdint>
#include <vector>

namespace kummerlab::fpx {

using u64 = std::uint64_t;

// Dense polynomials over Z/q, coefficients ascending. q is prime unless
// stated otherwise. The zero polynomial is the empty vector.
using Poly = std::vector<u64>;

Poly trim(Poly f);
int degree(const Poly& f);
Poly add(const Poly& a, const Poly& b, u64 q);
Poly sub(const Poly& a, const Poly& b, u64 q);
Poly mul(const Poly& a, const Poly& b, u64 q);
Poly scale(const Poly& a, u64 c, u64 q);
Poly monic(const Poly& f, u64 q);

// Euclidean division; q must be prime. Returns {quotient, remainder}.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 q);

Poly gcd(Poly a, Poly b, u64 q);
Poly derivative(const Poly& f, u64 q);
u64 eval(const Poly& f, u64 x, u64 q);

// Extended gcd: returns g = gcd(a, b) together with u with u*a = g mod b
// (the b-cofactor is dropped).
std::pair<Poly, Poly> half_egcd(Poly a, Poly b, u64 q);

// Roots in Z/q with multiplicities, by trial evaluation and synthetic
// division. Also returns the rootless cofactor.
struct RootSplit {
    std::vector<std::pair<u64, int>> roots;  // (root, multiplicity)
    Poly rootless;                           // monic factor without roots in Z/q
};
RootSplit split_roots(const Poly& f, u64 q);

}  // namespace kummerlab::fpx
