#include "kummerlab/bernoulli.hpp"

#include <stdexcept>

namespace kummerlab::bernoulli {

int primitive_root(int p) {
    if (p < 3 || !nt::is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("primitive_root: p must be an odd prime");
    return nt::least_primitive_root(static_cast<u64>(p));
}

std::map<int, u64> bernoulli_even_mod_p(int p) {
    if (p < 3 || !nt::is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("bernoulli_even_mod_p: p must be an odd prime");
    std::map<int, u64> out;
    if (p < 5) return out;
    const u64 q = static_cast<u64>(p);
    const int len = p - 2;  // coefficients 0..p-3

    // u = (e^t - 1)/t = sum t^i/(i+1)!; B_n = n! * [t^n] u^{-1}
    std::vector<u64> fact(p, 1);
    for (int i = 1; i < p; ++i) fact[i] = nt::mulmod(fact[i - 1], static_cast<u64>(i), q);
    std::vector<u64> u(len);
    for (int i = 0; i < len; ++i) u[i] = nt::powmod(fact[i + 1], q - 2, q);

    std::vector<u64> inv(len, 0);
    inv[0] = 1;
    for (int n = 1; n < len; ++n) {
        u64 s = 0;
        for (int k = 1; k <= n; ++k) s = nt::addmod(s, nt::mulmod(u[k], inv[n - k], q), q);
        inv[n] = s == 0 ? 0 : q - s;
    }
    for (int n = 2; n <= p - 3; n += 2) out[n] = nt::mulmod(inv[n], fact[n], q);
    return out;
}

std::vector<IrregularPair> irregular_pairs(int p, int v) {
    auto residues = bernoulli_even_mod_p(p);
    std::vector<IrregularPair> out;
    if (residues.empty()) return out;
    if (v == 0) v = primitive_root(p);
    const u64 q = static_cast<u64>(p);
    for (const auto& [two_m, r] : residues) {
        if (r != 0) continue;
        IrregularPair pair;
        pair.p = p;
        pair.two_m = two_m;
        pair.mu_plus = nt::powmod(static_cast<u64>(v), static_cast<u64>(two_m), q);
        pair.mu_minus = nt::powmod(static_cast<u64>(v), static_cast<u64>(p - two_m), q);
        out.push_back(pair);
    }
    return out;
}

std::vector<IrregularPair> scan_irregular(int max_p, RunMode mode) {
    std::vector<int> primes;
    for (int p = 3; p <= max_p; p += 2)
        if (nt::is_prime(static_cast<u64>(p))) primes.push_back(p);

    std::vector<std::vector<IrregularPair>> per_prime(primes.size());
    if (mode == RunMode::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (size_t i = 0; i < primes.size(); ++i) per_prime[i] = irregular_pairs(primes[i]);
    } else {
        for (size_t i = 0; i < primes.size(); ++i) per_prime[i] = irregular_pairs(primes[i]);
    }

    std::vector<IrregularPair> out;
    for (const auto& rows : per_prime) out.insert(out.end(), rows.begin(), rows.end());
    return out;
}

NormalizedIndex normalize_even_index(int p, long idx) {
    long r = idx % (p - 1);
    if (r < 0) r += p - 1;
    if (r == 0 || r == 1)
        throw std::domain_error("normalize_even_index: index reduces to 0 or 1 mod p-1");
    if (r % 2 == 0) return {static_cast<int>(r), false};
    return {static_cast<int>(p - r), true};
}

}  // namespace kummerlab::bernoulli
