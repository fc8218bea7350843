#include "kummerlab/witness.hpp"

#include <stdexcept>

namespace kummerlab::witness {

const char* to_string(Kind k) {
    switch (k) {
        case Kind::negative: return "negative";
        case Kind::positive: return "positive";
        case Kind::unit: return "unit";
    }
    return "?";
}

Kind kind_from_string(const std::string& s) {
    if (s == "negative") return Kind::negative;
    if (s == "positive") return Kind::positive;
    if (s == "unit") return Kind::unit;
    throw std::invalid_argument("unknown kind: " + s);
}

const Clause& RelationReport::at(const std::string& name) const {
    for (const auto& c : clauses)
        if (c.name == name) return c;
    throw std::out_of_range("no clause named " + name);
}

UnitExpr expr_combine(const UnitExpr& a, const mpz_class& ca, const UnitExpr& b, const mpz_class& cb) {
    if (a.p != b.p || a.v != b.v)
        throw std::invalid_argument("expr_combine: mismatched sessions");
    UnitExpr r{a.p, a.v, std::vector<mpz_class>(a.exponents.size())};
    for (size_t j = 0; j < r.exponents.size(); ++j)
        r.exponents[j] = ca * a.exponents[j] + cb * b.exponents[j];
    return r;
}

UnitExpr expr_sigma(const UnitExpr& a) {
    UnitExpr r{a.p, a.v, std::vector<mpz_class>(a.exponents.size())};
    for (size_t j = 0; j < r.exponents.size(); ++j)
        r.exponents[j] = a.exponents[(j + a.exponents.size() - 1) % a.exponents.size()];
    return r;
}

std::vector<u64> split_primes(int p, int count) {
    std::vector<u64> out;
    for (u64 q = 2 * static_cast<u64>(p) + 1; static_cast<int>(out.size()) < count;
         q += 2 * static_cast<u64>(p)) {
        if (nt::is_prime(q)) out.push_back(q);
    }
    return out;
}

namespace {

u64 order_p_root(u64 q, int p) {
    for (u64 a = 2;; ++a) {
        u64 r = nt::powmod(a, (q - 1) / static_cast<u64>(p), q);
        if (r != 1) return r;
    }
}

// delta evaluated at an order-p element x of F_q
u64 delta_image(int p, int v, u64 x, u64 q) {
    u64 s = nt::mulmod(static_cast<u64>(((1 - v) % p + p) % p), nt::invmod(2, p), p);
    u64 acc = 0;
    for (int t = 0; t < v; ++t)
        acc = nt::addmod(acc, nt::powmod(x, (s + t) % p, q), q);
    return acc;
}

}  // namespace

u64 expr_image(const UnitExpr& e, u64 q) {
    u64 root = order_p_root(q, e.p);
    u64 img = 1;
    u64 t = 1;
    mpz_class group(static_cast<unsigned long>(q - 1));
    for (size_t j = 0; j < e.exponents.size(); ++j) {
        if (e.exponents[j] != 0) {
            mpz_class r = e.exponents[j] % group;
            if (r < 0) r += group;
            u64 base = delta_image(e.p, e.v, nt::powmod(root, t, q), q);
            img = nt::mulmod(img, nt::powmod(base, r, q), q);
        }
        t = nt::mulmod(t, static_cast<u64>(e.v), static_cast<u64>(e.p));
    }
    return img;
}

bool is_pth_power(const UnitExpr& e, int num_primes) {
    for (u64 q : split_primes(e.p, num_primes)) {
        u64 img = expr_image(e, q);
        if (img == 0) continue;  // not a unit image; inconclusive for this q
        if (nt::powmod(img, (q - 1) / static_cast<u64>(e.p), q) != 1) return false;
    }
    return true;
}

bool is_pth_power(const cyclo::CycNum& a, int num_primes) {
    const int p = a.prime();
    int done = 0;
    for (u64 q : split_primes(p, num_primes + 8)) {
        if (done >= num_primes) break;
        u64 root = order_p_root(q, p);
        u64 img = 0;
        bool usable = true;
        u64 zp = 1;
        for (int i = 0; i < p - 1 && usable; ++i) {
            const mpq_class& c = a.coeffs()[i];
            if (c != 0) {
                mpz_class num = c.get_num() % static_cast<long>(q);
                if (num < 0) num += static_cast<long>(q);
                mpz_class den = c.get_den() % static_cast<long>(q);
                if (den == 0) {
                    usable = false;
                    break;
                }
                u64 term = nt::mulmod(num.get_ui(), nt::invmod(den.get_ui(), q), q);
                img = nt::addmod(img, nt::mulmod(term, zp, q), q);
            }
            zp = nt::mulmod(zp, root, q);
        }
        if (!usable || img == 0) continue;
        if (nt::powmod(img, (q - 1) / static_cast<u64>(p), q) != 1) return false;
        ++done;
    }
    return true;
}

template <class R>
RelationReport verify_singular_relations(const R& A, u64 mu, Kind kind, int v,
                                         const std::optional<R>& alpha,
                                         const std::optional<R>& D,
                                         const std::optional<UnitExpr>& expr) {
    const int p = A.prime();
    if (mu % static_cast<u64>(p) == 0)
        throw std::domain_error("verify_singular_relations: mu is not a unit mod p");
    RelationReport rep;

    cyclo::Primarity pr = cyclo::classify_primarity(A);  // rejects v_pi(A) != 0
    rep.clauses.push_back({"semi_primary",
                           pr.cls != cyclo::PrimarityClass::not_semi_primary ? ClauseState::pass
                                                                             : ClauseState::fail,
                           cyclo::to_string(pr.cls)});

    {
        Clause c{"kummer_eigenspace", ClauseState::unchecked, ""};
        mpz_class neg_mu = -mpz_class(static_cast<unsigned long>(mu));
        if (alpha) {
            R lhs = cyclo::galois_apply(A, 1, v) * A.pow(neg_mu);
            c.state = lhs == alpha->pow(p) ? ClauseState::pass : ClauseState::fail;
            c.note = "sigma(A) A^{-mu} compared with alpha^p";
        } else if (expr) {
            UnitExpr ratio = expr_combine(expr_sigma(*expr), 1, *expr, neg_mu);
            c.state = is_pth_power(ratio) ? ClauseState::pass : ClauseState::fail;
            c.note = "character test on the exponent form";
        } else if constexpr (std::is_same_v<R, cyclo::CycNum>) {
            R lhs = cyclo::galois_apply(A, 1, v) * A.pow(neg_mu);
            c.state = is_pth_power(lhs) ? ClauseState::pass : ClauseState::fail;
            c.note = "character test on the exact element";
        } else {
            c.note = "needs alpha, an exponent form, or the exact tier";
        }
        rep.clauses.push_back(c);
    }

    long n = nt::discrete_log(mu, static_cast<u64>(v), static_cast<u64>(p));
    if (n < 0) throw std::domain_error("verify_singular_relations: mu is not a power of v");

    {
        bool ok = pr.cls != cyclo::PrimarityClass::not_semi_primary && pr.valuation >= n;
        rep.clauses.push_back({"valuation_window", ok ? ClauseState::pass : ClauseState::fail,
                               "v_pi(A - a^p) >= " + std::to_string(n)});
    }

    {
        bool odd = (n % 2) == 1;
        bool ok = (kind == Kind::negative) == odd;
        rep.clauses.push_back({"eigenvalue_parity", ok ? ClauseState::pass : ClauseState::fail,
                               "mu = v^" + std::to_string(n)});
    }

    {
        Clause c{"conjugation_product", ClauseState::unchecked, "no D supplied"};
        if (D) {
            R conj = A.substituted(p - 1);
            if (kind == Kind::negative) {
                c.state = A * conj == D->pow(p) ? ClauseState::pass : ClauseState::fail;
                c.note = "A conj(A) compared with D^p";
            } else if (kind == Kind::positive) {
                c.state = A == D->pow(p) * conj ? ClauseState::pass : ClauseState::fail;
                c.note = "A / conj(A) compared with D^p";
            } else {
                c.note = "not applicable to the unit kind";
            }
        }
        rep.clauses.push_back(c);
    }
    return rep;
}

template RelationReport verify_singular_relations<cyclo::CycNum>(
    const cyclo::CycNum&, u64, Kind, int, const std::optional<cyclo::CycNum>&,
    const std::optional<cyclo::CycNum>&, const std::optional<UnitExpr>&);
template RelationReport verify_singular_relations<cyclo::CycMod>(
    const cyclo::CycMod&, u64, Kind, int, const std::optional<cyclo::CycMod>&,
    const std::optional<cyclo::CycMod>&, const std::optional<UnitExpr>&);

}  // namespace kummerlab::witness
