#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "kummerlab/cyclotomic.hpp"
#include "kummerlab/parallel.hpp"

namespace kummerlab::kummer {

using cyclo::u64;

// Thrown when a minimal-polynomial coefficient fails to collapse to a
// rational integer; that always signals an upstream bug, never data.
struct NonRationalCoefficient : std::runtime_error {
    explicit NonRationalCoefficient(int idx)
        : std::runtime_error("minimal polynomial coefficient " + std::to_string(idx) +
                             " is not rational"),
          index(idx) {}
    int index;
};

// Shared data of the radical presentation S = K[x]/(x^p - A^{p-1}).
template <class R>
struct ExtContext {
    int p;
    int v;
    R A;
    R A_pm1;                   // A^{p-1}, the reduction constant
    std::vector<R> A_pm1_pow;  // A^{(p-1)t} for t = 0..p-1
};

template <class R>
using ExtContextPtr = std::shared_ptr<const ExtContext<R>>;

template <class R>
ExtContextPtr<R> make_context(int v, const R& A) {
    const int p = A.prime();
    ExtContext<R> ctx{p, v, A, A.pow(p - 1), {}};
    ctx.A_pm1_pow.reserve(p);
    R cur = A.like_integer(1);
    for (int t = 0; t < p; ++t) {
        ctx.A_pm1_pow.push_back(cur);
        cur = cur * ctx.A_pm1;
    }
    return std::make_shared<const ExtContext<R>>(std::move(ctx));
}

// Element of S as sum_j c_j omega^j, degree < p, with omega^p = A^{p-1}
// folded eagerly. omega is a unit: omega^{-1} = omega^{p-1} A^{-(p-1)}.
template <class R>
class ExtElt {
public:
    ExtElt(ExtContextPtr<R> ctx, std::vector<R> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<size_t>(ctx_->p))
            throw std::invalid_argument("ExtElt: need exactly p coefficients");
    }

    static ExtElt zero(const ExtContextPtr<R>& ctx) {
        return ExtElt(ctx, std::vector<R>(ctx->p, ctx->A.like_integer(0)));
    }
    static ExtElt scalar(const ExtContextPtr<R>& ctx, const R& c) {
        ExtElt x = zero(ctx);
        x.c_[0] = c;
        return x;
    }
    static ExtElt monomial(const ExtContextPtr<R>& ctx, int k, const R& c) {
        if (k < 0 || k >= ctx->p) throw std::invalid_argument("ExtElt: monomial degree out of range");
        ExtElt x = zero(ctx);
        x.c_[k] = c;
        return x;
    }
    static ExtElt omega(const ExtContextPtr<R>& ctx) {
        return monomial(ctx, 1, ctx->A.like_integer(1));
    }

    const ExtContextPtr<R>& context() const { return ctx_; }
    const std::vector<R>& coeffs() const { return c_; }
    int prime() const { return ctx_->p; }

    ExtElt operator+(const ExtElt& o) const {
        check(o);
        std::vector<R> r;
        r.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] + o.c_[i]);
        return ExtElt(ctx_, std::move(r));
    }
    ExtElt operator-(const ExtElt& o) const {
        check(o);
        std::vector<R> r;
        r.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] - o.c_[i]);
        return ExtElt(ctx_, std::move(r));
    }
    ExtElt operator-() const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(-c);
        return ExtElt(ctx_, std::move(r));
    }
    ExtElt operator*(const ExtElt& o) const {
        check(o);
        const int p = ctx_->p;
        std::vector<R> acc(2 * p - 1, ctx_->A.like_integer(0));
        for (int i = 0; i < p; ++i) {
            if (c_[i].is_zero()) continue;
            for (int j = 0; j < p; ++j) {
                if (o.c_[j].is_zero()) continue;
                acc[i + j] = acc[i + j] + c_[i] * o.c_[j];
            }
        }
        std::vector<R> r(acc.begin(), acc.begin() + p);
        for (int k = p; k < 2 * p - 1; ++k) r[k - p] = r[k - p] + acc[k] * ctx_->A_pm1;
        return ExtElt(ctx_, std::move(r));
    }
    bool operator==(const ExtElt& o) const {
        if (ctx_->p != o.ctx_->p) return false;
        return c_ == o.c_;
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    // image in the residue field F_p under omega -> 1, zeta -> 1
    u64 residue_at_unity() const {
        u64 s = 0;
        for (const auto& c : c_) s = nt::addmod(s, c.residue_mod_pi(), static_cast<u64>(ctx_->p));
        return s;
    }

private:
    void check(const ExtElt& o) const {
        if (ctx_ == o.ctx_) return;
        if (ctx_->p != o.ctx_->p || !(ctx_->A == o.ctx_->A))
            throw std::invalid_argument("ExtElt: mixed radical presentations");
    }
    ExtContextPtr<R> ctx_;
    std::vector<R> c_;
};

// theta: omega -> omega zeta, fixing K; theta^p = 1.
template <class R>
ExtElt<R> theta_apply(const ExtElt<R>& x, long i) {
    const auto& ctx = x.context();
    const int p = ctx->p;
    std::vector<R> r;
    r.reserve(p);
    for (int j = 0; j < p; ++j)
        r.push_back(x.coeffs()[j] * ctx->A.like_zeta((i % p) * j));
    return ExtElt<R>(ctx, std::move(r));
}

// The automorphism sigma_mu extending sigma with sigma_mu(omega) =
// omega^mu beta, beta = alpha^{p-1} zeta^w semi-primary.
template <class R>
struct SigmaMu {
    ExtContextPtr<R> ctx;
    u64 mu = 0;
    int w = 0;
    R beta;
    std::vector<R> beta_pow;  // beta^j for j = 0..p-1
};

// The unique twist exponent w in [0, p-1] making y zeta^w semi-primary:
// with y = c0 + c1 lambda mod pi^2, w = -c1/c0 mod p.
template <class R>
int semiprimary_twist_exponent(const R& y) {
    const int p = y.prime();
    auto [c0, c1] = y.residue_mod_pi2();
    if (c0 == 0) throw std::domain_error("semiprimary_twist_exponent: input is not a pi-unit");
    u64 w = nt::mulmod(c1 == 0 ? 0 : static_cast<u64>(p) - c1, nt::invmod(c0, static_cast<u64>(p)),
                       static_cast<u64>(p));
    return static_cast<int>(w);
}

template <class R>
SigmaMu<R> select_semiprimary_w(const ExtContextPtr<R>& ctx, const R& alpha, u64 mu) {
    if (alpha.residue_mod_pi() == 0)
        throw std::domain_error("select_semiprimary_w: alpha must have lambda-valuation 0");
    const int p = ctx->p;
    R y = alpha.pow(p - 1);
    int w = semiprimary_twist_exponent(y);
    R beta = y * alpha.like_zeta(w);
    SigmaMu<R> s{ctx, mu % static_cast<u64>(p), w, beta, {}};
    s.beta_pow.reserve(p);
    R cur = alpha.like_integer(1);
    for (int j = 0; j < p; ++j) {
        s.beta_pow.push_back(cur);
        cur = cur * beta;
    }
    return s;
}

// sigma_mu applied k times. Coefficients move by sigma; the monomial
// omega^j maps to (omega^mu beta)^j with omega^{j mu} = omega^{j mu mod p}
// A^{(p-1) floor(j mu / p)}.
template <class R>
ExtElt<R> sigma_mu_apply(const ExtElt<R>& x, const SigmaMu<R>& s, int k) {
    if (k < 0) throw std::invalid_argument("sigma_mu_apply: k must be >= 0");
    const auto& ctx = x.context();
    const int p = ctx->p;
    ExtElt<R> cur = x;
    for (int step = 0; step < k; ++step) {
        std::vector<R> out(p, ctx->A.like_integer(0));
        for (int j = 0; j < p; ++j) {
            if (cur.coeffs()[j].is_zero()) continue;
            long jm = static_cast<long>(j) * static_cast<long>(s.mu);
            int rest = static_cast<int>(jm % p);
            int carry = static_cast<int>(jm / p);
            R c = cur.coeffs()[j].substituted(ctx->v) * s.beta_pow[j] * ctx->A_pm1_pow[carry];
            out[rest] = out[rest] + c;
        }
        cur = ExtElt<R>(ctx, std::move(out));
    }
    return cur;
}

// Omega = sum_{i=0}^{p-2} sigma_mu^i(omega), the period element generating
// the degree-p subfield.
template <class R>
ExtElt<R> omega_iterative(const SigmaMu<R>& s) {
    ExtElt<R> cur = ExtElt<R>::omega(s.ctx);
    ExtElt<R> acc = cur;
    for (int i = 1; i <= s.ctx->p - 2; ++i) {
        cur = sigma_mu_apply(cur, s, 1);
        acc = acc + cur;
    }
    return acc;
}

// Closed form for Omega_i = theta^i(Omega): sum over k of
//   omega^{mu_k} A^{(p-1)(mu^k - mu_k)/p} beta^{(sigma^k - mu^k)/(sigma - mu)} zeta^{i mu^k},
// with mu_k = mu^k mod p and the group-ring quotient expanded as
// sum_{j<k} sigma^j mu^{k-1-j}. The A-exponents are exact integers of size
// mu^k/p; they only ever touch the ring through modular exponentiation.
template <class R>
ExtElt<R> omega_closed_form(const SigmaMu<R>& s, long i) {
    const auto& ctx = s.ctx;
    const int p = ctx->p;
    ExtElt<R> acc = ExtElt<R>::zero(ctx);
    mpz_class mu_exact(static_cast<unsigned long>(s.mu));
    mpz_class Mk(1);  // mu^k, exact
    cyclo::GroupRingExp g;
    g.exponents.assign(p - 1, mpz_class(0));
    for (int k = 0; k <= p - 2; ++k) {
        if (k > 0) {
            // maintain exponents mu^{k-1-j}: multiply previous by mu, start sigma^{k-1} at 1
            for (int j = 0; j < k - 1; ++j) g.exponents[j] *= mu_exact;
            g.exponents[k - 1] = 1;
        }
        u64 mu_k = nt::powmod(s.mu, static_cast<u64>(k), static_cast<u64>(p));
        mpz_class Ek = (Mk - static_cast<unsigned long>(mu_k)) / p * (p - 1);
        R coef = ctx->A.pow(Ek);
        coef = coef * cyclo::groupring_apply(s.beta, g, ctx->v);
        coef = coef * ctx->A.like_zeta(static_cast<long>((i % p) * static_cast<long>(mu_k)));
        acc = acc + ExtElt<R>::monomial(ctx, static_cast<int>(mu_k), coef);
        Mk *= mu_exact;
    }
    return acc;
}

// All p conjugates Omega_i = theta^i(Omega).
template <class R>
std::vector<ExtElt<R>> conjugates(const ExtElt<R>& omega0) {
    std::vector<ExtElt<R>> out;
    const int p = omega0.prime();
    out.reserve(p);
    for (int i = 0; i < p; ++i) out.push_back(theta_apply(omega0, i));
    return out;
}

template <class R>
std::vector<ExtElt<R>> poly_mul(const std::vector<ExtElt<R>>& a, const std::vector<ExtElt<R>>& b,
                                RunMode mode) {
    const auto& ctx = a.front().context();
    const long n = static_cast<long>(a.size() + b.size() - 1);
    std::vector<ExtElt<R>> out(n, ExtElt<R>::zero(ctx));
    if (mode == RunMode::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < n; ++k) {
            for (size_t i = k >= static_cast<long>(b.size()) ? k - b.size() + 1 : 0;
                 i < a.size() && i <= static_cast<size_t>(k); ++i)
                out[k] = out[k] + a[i] * b[k - i];
        }
    } else {
        for (long k = 0; k < n; ++k) {
            for (size_t i = k >= static_cast<long>(b.size()) ? k - b.size() + 1 : 0;
                 i < a.size() && i <= static_cast<size_t>(k); ++i)
                out[k] = out[k] + a[i] * b[k - i];
        }
    }
    return out;
}

template <class R>
struct MinPoly {
    std::vector<R> coeffs;  // p+1 rational ring elements, leading one
};

// prod_i (X - Omega_i) by a balanced product tree. Every coefficient must
// collapse to a rational integer (zero coordinates on zeta and omega powers).
template <class R>
MinPoly<R> min_poly(const std::vector<ExtElt<R>>& omegas, RunMode mode = RunMode::parallel) {
    if (omegas.empty()) throw std::invalid_argument("min_poly: no conjugates given");
    const auto& ctx = omegas.front().context();
    const int p = ctx->p;
    if (omegas.size() != static_cast<size_t>(p))
        throw std::invalid_argument("min_poly: need all p conjugates");

    std::vector<std::vector<ExtElt<R>>> level;
    level.reserve(p);
    for (const auto& om : omegas)
        level.push_back({-om, ExtElt<R>::scalar(ctx, ctx->A.like_integer(1))});

    while (level.size() > 1) {
        std::vector<std::vector<ExtElt<R>>> next((level.size() + 1) / 2);
        const long pairs = static_cast<long>(level.size() / 2);
        if (mode == RunMode::parallel && pairs > 1) {
#pragma omp parallel for schedule(dynamic)
            for (long t = 0; t < pairs; ++t)
                next[t] = poly_mul(level[2 * t], level[2 * t + 1], RunMode::serial);
        } else {
            for (long t = 0; t < pairs; ++t)
                next[t] = poly_mul(level[2 * t], level[2 * t + 1], mode);
        }
        if (level.size() % 2) next.back() = std::move(level.back());
        level = std::move(next);
    }

    const auto& f = level.front();
    if (f.size() != static_cast<size_t>(p + 1)) throw std::logic_error("min_poly: degree mismatch");
    MinPoly<R> out;
    out.coeffs.reserve(p + 1);
    for (int i = 0; i <= p; ++i) {
        const auto& c = f[i].coeffs();
        for (int j = 1; j < p; ++j)
            if (!c[j].is_zero()) throw NonRationalCoefficient(i);
        if (!c[0].is_rational()) throw NonRationalCoefficient(i);
        out.coeffs.push_back(c[0]);
    }
    if (!(out.coeffs.back() == ctx->A.like_integer(1))) throw std::logic_error("min_poly: not monic");
    return out;
}

// f evaluated at x in S by Horner; used to confirm f(Omega_i) = 0.
template <class R>
ExtElt<R> eval_poly(const MinPoly<R>& f, const ExtElt<R>& x) {
    const auto& ctx = x.context();
    ExtElt<R> acc = ExtElt<R>::scalar(ctx, f.coeffs.back());
    for (int i = static_cast<int>(f.coeffs.size()) - 2; i >= 0; --i)
        acc = acc * x + ExtElt<R>::scalar(ctx, f.coeffs[i]);
    return acc;
}

}  // namespace kummerlab::kummer
