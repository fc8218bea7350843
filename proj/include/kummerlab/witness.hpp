#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kummerlab/cyclotomic.hpp"

namespace kummerlab::witness {

using cyclo::u64;

enum class Kind { negative, positive, unit };
const char* to_string(Kind k);
Kind kind_from_string(const std::string& s);

// A unit of Z[zeta]^* kept in exponent form over the conjugates of the
// base cyclotomic unit delta = zeta^{(1-v)/2} (1-zeta^v)/(1-zeta):
// the element is prod_j sigma^j(delta)^{exponents[j]}. This form survives
// reduction mod auxiliary primes q = 1 mod p, which is what the p-th power
// character tests need at sizes where the exact element is out of reach.
struct UnitExpr {
    int p = 0;
    int v = 0;
    std::vector<mpz_class> exponents;  // length p-1
};

UnitExpr expr_combine(const UnitExpr& a, const mpz_class& ca, const UnitExpr& b, const mpz_class& cb);
UnitExpr expr_sigma(const UnitExpr& a);  // apply sigma once

// Auxiliary primes q = 1 mod p for character tests; count of them, smallest first.
std::vector<u64> split_primes(int p, int count);

// Image of the expression in F_q under zeta -> (an element of order p).
// One image per choice of order-p root; the test uses the canonical one
// derived from the least witness a with a^{(q-1)/p} != 1.
u64 expr_image(const UnitExpr& e, u64 q);

// Monte-Carlo p-th power detection: the p-th power character of the image
// must vanish in every tested residue field. False positives have
// probability about p^{-num_primes}; a false negative is impossible.
bool is_pth_power(const UnitExpr& e, int num_primes = 5);
bool is_pth_power(const cyclo::CycNum& a, int num_primes = 5);

// delta as a ring element; integer coefficients, so it exists in both tiers.
template <class R>
R delta_unit(const R& proto, int v) {
    const int p = proto.prime();
    u64 s = nt::mulmod(static_cast<u64>(((1 - v) % p + p) % p), nt::invmod(2, p), p);
    R acc = proto.like_integer(0);
    for (int t = 0; t < v; ++t) acc = acc + proto.like_zeta(static_cast<long>(s) + t);
    return acc;
}

template <class R>
struct SingularWitness {
    int p = 0;
    int v = 0;
    int m = 0;
    u64 mu = 0;
    Kind kind = Kind::unit;
    R A;
    R alpha;
    cyclo::Primarity primarity{};
    bool degenerate = false;
    UnitExpr a_expr;      // A over the delta-conjugate basis
    UnitExpr alpha_expr;  // alpha over the same basis
};

// Builds the singular unit with eigenvalue mu = v^{2m}: A = prod_j
// sigma^j(delta)^{e_j} with e_j the representative of mu^{-j} in [0, p-1].
// The cofactor alpha comes from e_{j-1} - mu*e_j = 0 mod p, which makes
// sigma(A) A^{-mu} = alpha^p an identity of the construction; it is still
// verified here at working precision before the witness is returned.
template <class R>
SingularWitness<R> kummer_unit_witness(const R& proto, int v, int m) {
    const int p = proto.prime();
    if (m < 1 || 2 * m > p - 3)
        throw std::invalid_argument("kummer_unit_witness: need 1 <= m <= (p-3)/2");
    if (!nt::is_primitive_root(static_cast<u64>(v), static_cast<u64>(p)))
        throw std::invalid_argument("kummer_unit_witness: v is not a primitive root");

    SingularWitness<R> w{p, v, m, 0, Kind::unit, proto, proto, {}, false, {}, {}};
    w.mu = nt::powmod(static_cast<u64>(v), static_cast<u64>(2 * m), static_cast<u64>(p));

    const u64 mu_inv = nt::invmod(w.mu, static_cast<u64>(p));
    std::vector<u64> e(p - 1);
    e[0] = 1;
    for (int j = 1; j < p - 1; ++j) e[j] = nt::mulmod(e[j - 1], mu_inv, static_cast<u64>(p));

    cyclo::GroupRingExp ea, et;
    ea.exponents.assign(p - 1, mpz_class(0));
    et.exponents.assign(p - 1, mpz_class(0));
    for (int j = 0; j < p - 1; ++j) {
        ea.exponents[j] = static_cast<unsigned long>(e[j]);
        long prev = static_cast<long>(e[(j + p - 2) % (p - 1)]);
        long diff = prev - static_cast<long>(w.mu) * static_cast<long>(e[j]);
        if (diff % p != 0) throw std::logic_error("kummer_unit_witness: exponent identity broken");
        et.exponents[j] = diff / p;
    }

    R delta = delta_unit(proto, v);
    w.A = cyclo::groupring_apply(delta, ea, v);
    w.alpha = cyclo::groupring_apply(delta, et, v);
    w.a_expr = UnitExpr{p, v, ea.exponents};
    w.alpha_expr = UnitExpr{p, v, et.exponents};

    R lhs = cyclo::galois_apply(w.A, 1, v) * w.A.pow(-mpz_class(static_cast<long>(w.mu)));
    if (!(lhs == w.alpha.pow(p)))
        throw std::logic_error("kummer_unit_witness: sigma(A) A^{-mu} != alpha^p");

    w.primarity = cyclo::classify_primarity(w.A);
    w.degenerate = is_pth_power(w.a_expr);
    return w;
}

enum class ClauseState { pass, fail, unchecked };

struct Clause {
    std::string name;
    ClauseState state;
    std::string note;
};

struct RelationReport {
    std::vector<Clause> clauses;
    bool all_checked_pass() const {
        for (const auto& c : clauses)
            if (c.state == ClauseState::fail) return false;
        return true;
    }
    const Clause& at(const std::string& name) const;
};

// Checks the defining relations of a singular number of the given kind:
// semi-primarity, sigma(A) A^{-mu} in K^p, the valuation window
// pi^n | A - a^p for n the discrete log of mu, the parity of that log
// against the kind, and (when D is supplied) the conjugation product.
// The K^p clause needs alpha, an exponent form, or the exact tier; it is
// reported unchecked otherwise.
template <class R>
RelationReport verify_singular_relations(const R& A, u64 mu, Kind kind, int v,
                                         const std::optional<R>& alpha = {},
                                         const std::optional<R>& D = {},
                                         const std::optional<UnitExpr>& expr = {});

}  // namespace kummerlab::witness
