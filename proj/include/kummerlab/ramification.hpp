#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kummerlab/numtheory.hpp"
#include "kummerlab/witness.hpp"

namespace kummerlab::ramify {

using nt::u64;

struct PrimeBlock {
    long e;      // ramification index
    long f;      // inertia degree
    long count;  // how many primes share (e, f)
    bool operator==(const PrimeBlock&) const = default;
};

// Predicted decomposition of p in the degree-p field M = Q(Omega), driven
// by d = ord(v mu^{-1}) and the primarity of the witness. sum e*f*count = p.
struct DecompositionReport {
    int p = 0;
    u64 mu = 0;
    long d = 0;
    bool primary = false;
    std::vector<PrimeBlock> primes;
    std::vector<long> orbit_partition;
};

// Order of v mu^{-1} mod p. mu = v is forbidden (the eigenvalue never
// equals v), mu = 0 rejected.
long order_d(int p, int v, u64 mu);

// Image index of the k-th prime under sigma_mu: n_k = k v mu^{-1} mod p.
long orbit_map(int p, int v, u64 mu, long k);

// Orbit lengths of {0..p-1} under k -> k v mu^{-1}: the fixed point 0 and
// (p-1)/d cycles of length d.
std::vector<long> orbit_partition(int p, int v, u64 mu);

enum class HalfTurn { fixes_all, negates_indices };

struct HalfTurnResult {
    HalfTurn value;
    bool matches_kind;  // negative should fix, positive/unit should negate
};

// (v mu^{-1})^{(p-1)/2} is +-1; +1 fixes every prime index, -1 sends
// k -> -k mod p.
HalfTurnResult half_turn(int p, int v, u64 mu, witness::Kind kind);

DecompositionReport predict_decomposition(int p, int v, u64 mu, bool primary);

enum class LocalVerdict { confirmed, inconclusive, contradicted };

struct LocalCheck {
    LocalVerdict verdict;
    std::string reason;
};

const char* to_string(LocalVerdict v);

// Best-effort corroboration of a predicted decomposition from the minimal
// polynomial known mod p^2: root enumeration mod p gives the candidate
// factor shape, the Dedekind index test decides whether that shape is the
// true splitting, and the totally ramified case falls back to the
// Eisenstein criterion after the shift X -> X + (p-1). Returns
// inconclusive, never a guess, when p divides the index.
LocalCheck verify_decomposition_local(const std::vector<u64>& f_mod_p2, int p,
                                      const DecompositionReport& report);

}  // namespace kummerlab::ramify
