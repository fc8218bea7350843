#include "kummerlab/ramification.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kummerlab/fp_poly.hpp"

namespace kummerlab::ramify {

const char* to_string(LocalVerdict v) {
    switch (v) {
        case LocalVerdict::confirmed: return "confirmed";
        case LocalVerdict::inconclusive: return "inconclusive";
        case LocalVerdict::contradicted: return "contradicted";
    }
    return "?";
}

namespace {

u64 ratio_v_over_mu(int p, int v, u64 mu) {
    mu %= static_cast<u64>(p);
    if (mu == 0) throw std::domain_error("mu must be a unit mod p");
    u64 r = nt::mulmod(static_cast<u64>(v % p), nt::invmod(mu, p), static_cast<u64>(p));
    if (r == 1)
        throw std::domain_error("mu = v mod p is excluded (Stickelberger)");
    return r;
}

}  // namespace

long order_d(int p, int v, u64 mu) {
    u64 r = ratio_v_over_mu(p, v, mu);
    u64 x = r;
    long d = 1;
    while (x != 1) {
        x = nt::mulmod(x, r, static_cast<u64>(p));
        ++d;
    }
    return d;
}

long orbit_map(int p, int v, u64 mu, long k) {
    if (k < 0 || k > p - 1) throw std::invalid_argument("orbit_map: k out of range");
    u64 r = ratio_v_over_mu(p, v, mu);
    return static_cast<long>(nt::mulmod(static_cast<u64>(k), r, static_cast<u64>(p)));
}

std::vector<long> orbit_partition(int p, int v, u64 mu) {
    u64 r = ratio_v_over_mu(p, v, mu);
    std::vector<bool> seen(p, false);
    std::vector<long> lengths;
    for (int k = 0; k < p; ++k) {
        if (seen[k]) continue;
        long len = 0;
        u64 x = static_cast<u64>(k);
        do {
            seen[x] = true;
            x = nt::mulmod(x, r, static_cast<u64>(p));
            ++len;
        } while (!seen[x]);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

HalfTurnResult half_turn(int p, int v, u64 mu, witness::Kind kind) {
    u64 r = ratio_v_over_mu(p, v, mu);
    u64 s = nt::powmod(r, static_cast<u64>((p - 1) / 2), static_cast<u64>(p));
    if (s != 1 && s != static_cast<u64>(p - 1))
        throw std::logic_error("half_turn: square root of unity is not +-1");
    HalfTurn value = s == 1 ? HalfTurn::fixes_all : HalfTurn::negates_indices;
    bool expect_fix = kind == witness::Kind::negative;
    return {value, (value == HalfTurn::fixes_all) == expect_fix};
}

DecompositionReport predict_decomposition(int p, int v, u64 mu, bool primary) {
    DecompositionReport rep;
    rep.p = p;
    rep.mu = mu % static_cast<u64>(p);
    rep.d = order_d(p, v, mu);
    rep.primary = primary;
    rep.orbit_partition = orbit_partition(p, v, mu);
    if (primary) {
        rep.primes.push_back({1, 1, 1});
        rep.primes.push_back({rep.d, 1, (p - 1) / rep.d});
    } else {
        rep.primes.push_back({p, 1, 1});
    }
    long total = 0;
    for (const auto& b : rep.primes) total += b.e * b.f * b.count;
    if (total != p) throw std::logic_error("predict_decomposition: e*f*count does not sum to p");
    return rep;
}

namespace {

// f(X + c) mod q via the binomial triangle mod q.
std::vector<u64> shift_poly(const std::vector<u64>& f, u64 c, u64 q) {
    const size_t n = f.size();
    std::vector<u64> out(n, 0);
    std::vector<u64> row(n, 0);  // binomials C(k, j) for the current k
    for (size_t k = 0; k < n; ++k) {
        // update row to C(k, .)
        row[k] = 1;
        for (size_t j = k; j-- > 1;) row[j] = nt::addmod(row[j], row[j - 1], q);
        if (f[k] == 0) continue;
        u64 cp = 1;  // c^{k-j}
        for (size_t j = k + 1; j-- > 0;) {
            out[j] = nt::addmod(out[j], nt::mulmod(f[k], nt::mulmod(row[j], cp, q), q), q);
            cp = nt::mulmod(cp, c, q);
        }
    }
    return out;
}

struct DedekindOutcome {
    bool ran = false;       // shape analysis available
    bool index_coprime = false;
    std::vector<std::pair<u64, int>> roots;
    bool has_nonlinear = false;
};

DedekindOutcome dedekind_test(const std::vector<u64>& f_mod_p2, int p) {
    const u64 q = static_cast<u64>(p);
    const u64 q2 = q * q;
    DedekindOutcome out;

    fpx::Poly fbar(f_mod_p2.size());
    for (size_t i = 0; i < f_mod_p2.size(); ++i) fbar[i] = f_mod_p2[i] % q;
    fbar = fpx::trim(std::move(fbar));
    if (fpx::degree(fbar) != p) throw std::logic_error("dedekind: degree dropped mod p");

    auto split = fpx::split_roots(fbar, q);
    out.roots = split.roots;
    out.has_nonlinear = fpx::degree(split.rootless) > 0;

    // radical g and cofactor h of fbar
    fpx::Poly g, h;
    fpx::Poly deriv = fpx::derivative(fbar, q);
    if (deriv.empty()) {
        // degree-p polynomial with zero derivative is X^p + a0 = (X - c)^p
        u64 c = fbar[0] == 0 ? 0 : q - fbar[0];
        g = {q - c, 1};
        if (g[0] == q) g[0] = 0;
        h = {1};
        for (int i = 0; i < p - 1; ++i) h = fpx::mul(h, g, q);
    } else {
        fpx::Poly cof = fpx::gcd(fbar, deriv, q);
        auto [quo, rem] = fpx::divmod(fbar, cof, q);
        if (!rem.empty()) throw std::logic_error("dedekind: radical division failed");
        g = quo;
        auto [quo2, rem2] = fpx::divmod(fbar, g, q);
        if (!rem2.empty()) throw std::logic_error("dedekind: cofactor division failed");
        h = quo2;
    }

    // T = (G H - f)/p mod p with the canonical monic lifts of g and h
    std::vector<u64> gh(g.size() + h.size() - 1, 0);
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < h.size(); ++j)
            gh[i + j] = nt::addmod(gh[i + j], nt::mulmod(g[i], h[j], q2), q2);
    fpx::Poly tbar(gh.size(), 0);
    for (size_t i = 0; i < gh.size(); ++i) {
        u64 diff = nt::submod(gh[i], i < f_mod_p2.size() ? f_mod_p2[i] % q2 : 0, q2);
        if (diff % q != 0) throw std::logic_error("dedekind: G H != f mod p");
        tbar[i] = (diff / q) % q;
    }
    tbar = fpx::trim(std::move(tbar));

    fpx::Poly w = fpx::gcd(fpx::gcd(g, h, q), tbar, q);
    out.index_coprime = fpx::degree(w) <= 0;
    out.ran = true;
    return out;
}

bool eisenstein_after_shift(const std::vector<u64>& f_mod_p2, int p) {
    const u64 q = static_cast<u64>(p);
    const u64 q2 = q * q;
    std::vector<u64> g = shift_poly(f_mod_p2, static_cast<u64>(p - 1), q2);
    for (int j = 1; j < p; ++j)
        if (g[j] % q != 0) return false;
    return g[0] % q == 0 && g[0] % q2 != 0;
}

}  // namespace

LocalCheck verify_decomposition_local(const std::vector<u64>& f_mod_p2, int p,
                                      const DecompositionReport& report) {
    if (f_mod_p2.size() != static_cast<size_t>(p + 1))
        throw std::invalid_argument("verify_decomposition_local: need degree exactly p");
    const u64 q2 = static_cast<u64>(p) * static_cast<u64>(p);
    if (f_mod_p2[p] % q2 != 1)
        throw std::invalid_argument("verify_decomposition_local: polynomial must be monic");

    std::multiset<long> expected;
    for (const auto& b : report.primes)
        for (long i = 0; i < b.count; ++i) expected.insert(b.e);

    const bool totally_ramified = expected == std::multiset<long>{static_cast<long>(p)};

    // Eisenstein shift settles the totally ramified case even when the
    // Dedekind test fails.
    if (totally_ramified && eisenstein_after_shift(f_mod_p2, p))
        return {LocalVerdict::confirmed, "eisenstein criterion after shift by p-1"};

    DedekindOutcome ded = dedekind_test(f_mod_p2, p);
    if (!ded.index_coprime)
        return {LocalVerdict::inconclusive, "index divisible by p"};

    // index is coprime to p: the factor shape mod p is the true splitting
    if (ded.has_nonlinear)
        return {LocalVerdict::contradicted, "irreducible factor of degree > 1, inertia must be 1"};

    std::multiset<long> actual;
    for (const auto& [root, mult] : ded.roots) actual.insert(mult);
    if (actual == expected)
        return {LocalVerdict::confirmed, "dedekind index test and root multiplicities"};
    return {LocalVerdict::contradicted, "root multiplicities disagree with the prediction"};
}

}  // namespace kummerlab::ramify
