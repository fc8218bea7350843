#include "kummerlab/fp_poly.hpp"

#include <stdexcept>

#include "kummerlab/numtheory.hpp"

namespace kummerlab::fpx {

using nt::addmod;
using nt::invmod;
using nt::mulmod;
using nt::submod;

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int degree(const Poly& f) {
    return static_cast<int>(f.size()) - 1;
}

Poly add(const Poly& a, const Poly& b, u64 q) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = addmod(x, y, q);
    }
    return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, u64 q) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = submod(x, y, q);
    }
    return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, u64 q) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], q), q);
        }
    }
    return trim(std::move(r));
}

Poly scale(const Poly& a, u64 c, u64 q) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c % q, q);
    return trim(std::move(r));
}

Poly monic(const Poly& f, u64 q) {
    Poly g = trim(f);
    if (g.empty()) return g;
    return scale(g, invmod(g.back(), q), q);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 q) {
    Poly rem = trim(a);
    Poly quo;
    Poly bb = trim(b);
    if (bb.empty()) throw std::domain_error("fpx::divmod: division by zero");
    u64 lead_inv = invmod(bb.back(), q);
    if (rem.size() >= bb.size()) quo.assign(rem.size() - bb.size() + 1, 0);
    while (rem.size() >= bb.size() && !rem.empty()) {
        size_t shift = rem.size() - bb.size();
        u64 c = mulmod(rem.back(), lead_inv, q);
        quo[shift] = c;
        for (size_t i = 0; i < bb.size(); ++i) {
            rem[shift + i] = submod(rem[shift + i], mulmod(c, bb[i], q), q);
        }
        rem = trim(std::move(rem));
    }
    return {trim(std::move(quo)), rem};
}

Poly gcd(Poly a, Poly b, u64 q) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = divmod(a, b, q).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, q);
}

Poly derivative(const Poly& f, u64 q) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = mulmod(f[i], i % q, q);
    return trim(std::move(r));
}

u64 eval(const Poly& f, u64 x, u64 q) {
    u64 r = 0;
    for (size_t i = f.size(); i-- > 0;) r = addmod(mulmod(r, x, q), f[i], q);
    return r;
}

std::pair<Poly, Poly> half_egcd(Poly a, Poly b, u64 q) {
    Poly r0 = trim(std::move(a)), r1 = trim(std::move(b));
    Poly u0 = {1}, u1 = {};
    while (!r1.empty()) {
        auto [quo, rem] = divmod(r0, r1, q);
        Poly u2 = sub(u0, mul(quo, u1, q), q);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.empty()) return {r0, u0};
    u64 c = invmod(r0.back(), q);
    return {scale(r0, c, q), scale(u0, c, q)};
}

RootSplit split_roots(const Poly& f, u64 q) {
    RootSplit out;
    Poly g = monic(f, q);
    for (u64 c = 0; c < q && degree(g) > 0; ++c) {
        int mult = 0;
        while (!g.empty() && eval(g, c, q) == 0) {
            // synthetic division by (x - c)
            Poly h(g.size() - 1);
            u64 carry = 0;
            for (size_t i = g.size(); i-- > 1;) {
                carry = addmod(g[i], mulmod(carry, c, q), q);
                h[i - 1] = carry;
            }
            g = std::move(h);
            ++mult;
        }
        if (mult > 0) out.roots.push_back({c, mult});
    }
    out.rootless = g.empty() ? Poly{1} : g;
    return out;
}

}  // namespace kummerlab::fpx
