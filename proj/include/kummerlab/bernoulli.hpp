#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kummerlab/numtheory.hpp"
#include "kummerlab/parallel.hpp"

namespace kummerlab::bernoulli {

using nt::u64;

// An even index 2m with B_{2m} = 0 mod p, together with the two unit-group
// eigenvalues it pins down: v^{2m} (positive/unit side) and v^{p-2m}
// (negative side, odd exponent). v is the session primitive root.
struct IrregularPair {
    int p;
    int two_m;
    u64 mu_plus;
    u64 mu_minus;
};

// Least positive primitive root mod p.
int primitive_root(int p);

// Residues B_{2k} mod p for 2 <= 2k <= p-3, all at once via inversion of
// the power series (e^t - 1)/t mod p. Denominators in this index range are
// prime to p, so the residues are well defined.
std::map<int, u64> bernoulli_even_mod_p(int p);

// Ascending irregular indices for p, with eigenvalues computed from v
// (defaults to the least primitive root).
std::vector<IrregularPair> irregular_pairs(int p, int v = 0);

// All irregular pairs with p <= max_p, ordered by (p, 2m).
std::vector<IrregularPair> scan_irregular(int max_p, RunMode mode = RunMode::parallel);

// Bernoulli indices are periodic mod p-1 in the congruence sense; odd
// residues are mapped to the even partner p - r and flagged, since B at an
// odd index is not what congruence statements about eigenvalues refer to.
struct NormalizedIndex {
    int index;
    bool reflected;
};
NormalizedIndex normalize_even_index(int p, long idx);

}  // namespace kummerlab::bernoulli
