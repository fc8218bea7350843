#include "kummerlab/cyclotomic.hpp"

#include <algorithm>

#include "kummerlab/fp_poly.hpp"

namespace kummerlab::cyclo {

namespace {

void check_prime(int p) {
    if (p < 3 || !nt::is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("p must be an odd prime");
}

// v_p of a nonzero mpz, capped at cap.
long vp_mpz(const mpz_class& n, int p, long cap) {
    if (n == 0) return cap;
    mpz_class m = n;
    long v = 0;
    while (v < cap && mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

u64 mpz_mod_u64(const mpz_class& n, u64 q) {
    mpz_class r;
    mpz_class qq;
    mpz_import(qq.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &q);
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), qq.get_mpz_t());
    return static_cast<u64>(r.get_ui());
}

u64 mpq_mod_u64(const mpq_class& x, u64 q) {
    u64 num = mpz_mod_u64(x.get_num(), q);
    u64 den = mpz_mod_u64(x.get_den(), q);
    return nt::mulmod(num, nt::invmod(den, q), q);
}

}  // namespace

const char* to_string(PrimarityClass c) {
    switch (c) {
        case PrimarityClass::not_semi_primary: return "not_semi_primary";
        case PrimarityClass::semi_primary: return "semi_primary";
        case PrimarityClass::primary: return "primary";
        case PrimarityClass::hyper_primary: return "hyper_primary";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum(int p, std::vector<mpq_class> raw) : p_(p), c_(p - 1) {
    check_prime(p);
    if (raw.size() > static_cast<size_t>(p))
        throw std::invalid_argument("CycNum: raw coefficient vector longer than p");
    raw.resize(p, mpq_class(0));
    for (int i = 0; i < p - 1; ++i) c_[i] = raw[i] - raw[p - 1];
}

CycNum CycNum::zero(int p) {
    check_prime(p);
    return CycNum(p);
}

CycNum CycNum::integer(int p, const mpz_class& n) {
    CycNum x = zero(p);
    x.c_[0] = mpq_class(n);
    return x;
}

CycNum CycNum::zeta_power(int p, long k) {
    CycNum x = zero(p);
    long r = k % p;
    if (r < 0) r += p;
    if (r == p - 1) {
        for (auto& c : x.c_) c = -1;
    } else {
        x.c_[r] = 1;
    }
    return x;
}

CycNum CycNum::operator+(const CycNum& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycNum: mixed primes");
    CycNum r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycNum: mixed primes");
    CycNum r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycNum CycNum::operator-() const {
    CycNum r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = -c_[i];
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycNum: mixed primes");
    // convolution with zeta^p = 1, then fold zeta^{p-1}
    std::vector<mpq_class> acc(p_, mpq_class(0));
    for (int i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < p_ - 1; ++j) {
            if (o.c_[j] == 0) continue;
            int k = i + j;
            if (k >= p_) k -= p_;
            acc[k] += c_[i] * o.c_[j];
        }
    }
    CycNum r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = acc[i] - acc[p_ - 1];
    return r;
}

bool CycNum::operator==(const CycNum& o) const {
    return p_ == o.p_ && c_ == o.c_;
}

bool CycNum::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (int i = 1; i < p_ - 1; ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class CycNum::rational_part() const {
    if (!is_rational()) throw std::logic_error("CycNum: element is not rational");
    return c_[0];
}

CycNum CycNum::substituted(long t) const {
    long r = t % p_;
    if (r < 0) r += p_;
    if (r == 0) throw std::invalid_argument("CycNum: substitution exponent divisible by p");
    std::vector<mpq_class> acc(p_, mpq_class(0));
    for (int i = 0; i < p_ - 1; ++i) {
        acc[static_cast<size_t>((static_cast<long>(i) * r) % p_)] += c_[i];
    }
    CycNum out(p_);
    for (int i = 0; i < p_ - 1; ++i) out.c_[i] = acc[i] - acc[p_ - 1];
    return out;
}

mpq_class CycNum::norm() const {
    CycNum prod = integer(p_, 1);
    for (long t = 1; t < p_; ++t) prod = prod * substituted(t);
    return prod.rational_part();
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
    CycNum cof = integer(p_, 1);
    for (long t = 2; t < p_; ++t) cof = cof * substituted(t);
    mpq_class n = (*this * cof).rational_part();
    CycNum r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = cof.c_[i] / n;
    return r;
}

CycNum CycNum::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(mpz_class(-e));
    CycNum r = integer(p_, 1);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
    }
    return r;
}

LambdaVal CycNum::lambda_valuation() const {
    if (is_zero()) return {0, false, true};
    // scale to Z[zeta]; the scale must be a pi-unit
    mpz_class den(1);
    for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p_)))
        throw std::domain_error("lambda_valuation: denominator divisible by p");
    std::vector<mpz_class> z(p_ - 1);
    for (int i = 0; i < p_ - 1; ++i) {
        mpq_class s = c_[i] * den;
        z[i] = s.get_num();  // denominator is 1 after scaling
    }
    // coords on powers of lambda: d_i = sum_k C(k,i) z_k
    std::vector<mpz_class> d(p_ - 1, mpz_class(0));
    std::vector<mpz_class> row(p_ - 1, mpz_class(0));
    row[0] = 1;
    for (int k = 0; k < p_ - 1; ++k) {
        if (z[k] != 0)
            for (int i = 0; i <= k; ++i) d[i] += row[i] * z[k];
        for (int i = std::min(k + 1, p_ - 2); i >= 1; --i) row[i] += row[i - 1];
    }
    // terms i + (p-1) v_p(d_i) have pairwise distinct residues mod p-1,
    // so the minimum is the exact valuation
    long best = std::numeric_limits<long>::max();
    for (int i = 0; i < p_ - 1; ++i) {
        if (d[i] == 0) continue;
        long v = i + static_cast<long>(p_ - 1) * vp_mpz(d[i], p_, std::numeric_limits<int>::max());
        best = std::min(best, v);
    }
    return {best, false, false};
}

std::pair<u64, u64> CycNum::residue_mod_pi2() const {
    mpq_class d0(0), d1(0);
    for (int k = 0; k < p_ - 1; ++k) {
        d0 += c_[k];
        d1 += k * c_[k];
    }
    u64 p = static_cast<u64>(p_);
    return {mpq_mod_u64(d0, p), mpq_mod_u64(d1, p)};
}

// ---------------------------------------------------------------------------
// CycMod

CycMod::CycMod(int p, int prec) : p_(p), prec_(prec), c_(p - 1, 0) {
    check_prime(p);
    if (prec < 1) throw std::invalid_argument("CycMod: precision must be >= 1");
    // keep p * q^2 inside 128 bits so convolutions can defer reduction
    q_ = nt::pow_checked(static_cast<u64>(p), prec, u64(1) << 59);
}

CycMod::CycMod(int p, int prec, std::vector<u64> raw) : CycMod(p, prec) {
    if (raw.size() > static_cast<size_t>(p))
        throw std::invalid_argument("CycMod: raw coefficient vector longer than p");
    raw.resize(p, 0);
    u64 tail = raw[p - 1] % q_;
    for (int i = 0; i < p_ - 1; ++i) c_[i] = nt::submod(raw[i] % q_, tail, q_);
}

CycMod CycMod::zero(int p, int prec) {
    return CycMod(p, prec);
}

CycMod CycMod::integer(int p, int prec, const mpz_class& n) {
    CycMod x(p, prec);
    x.c_[0] = mpz_mod_u64(n, x.q_);
    return x;
}

CycMod CycMod::zeta_power(int p, int prec, long k) {
    CycMod x(p, prec);
    long r = k % p;
    if (r < 0) r += p;
    if (r == p - 1) {
        for (auto& c : x.c_) c = x.q_ - 1;
    } else {
        x.c_[r] = 1;
    }
    return x;
}

void CycMod::check_compatible(const CycMod& o) const {
    if (p_ != o.p_ || prec_ != o.prec_)
        throw std::invalid_argument("CycMod: mixed primes or precisions");
}

CycMod CycMod::operator+(const CycMod& o) const {
    check_compatible(o);
    CycMod r(p_, prec_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = nt::addmod(c_[i], o.c_[i], q_);
    return r;
}

CycMod CycMod::operator-(const CycMod& o) const {
    check_compatible(o);
    CycMod r(p_, prec_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = nt::submod(c_[i], o.c_[i], q_);
    return r;
}

CycMod CycMod::operator-() const {
    CycMod r(p_, prec_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = c_[i] == 0 ? 0 : q_ - c_[i];
    return r;
}

CycMod CycMod::operator*(const CycMod& o) const {
    check_compatible(o);
    // accumulate in 128 bits: p * q^2 < 2^127 by construction
    std::vector<u128> acc(p_, 0);
    for (int i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < p_ - 1; ++j) {
            int k = i + j;
            if (k >= p_) k -= p_;
            acc[k] += static_cast<u128>(c_[i]) * o.c_[j];
        }
    }
    u64 tail = static_cast<u64>(acc[p_ - 1] % q_);
    CycMod r(p_, prec_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = nt::submod(static_cast<u64>(acc[i] % q_), tail, q_);
    return r;
}

bool CycMod::operator==(const CycMod& o) const {
    return p_ == o.p_ && prec_ == o.prec_ && c_ == o.c_;
}

bool CycMod::is_zero() const {
    for (u64 c : c_)
        if (c != 0) return false;
    return true;
}

bool CycMod::is_rational() const {
    for (int i = 1; i < p_ - 1; ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycMod CycMod::substituted(long t) const {
    long r = t % p_;
    if (r < 0) r += p_;
    if (r == 0) throw std::invalid_argument("CycMod: substitution exponent divisible by p");
    std::vector<u64> acc(p_, 0);
    for (int i = 0; i < p_ - 1; ++i) {
        size_t k = static_cast<size_t>((static_cast<long>(i) * r) % p_);
        acc[k] = nt::addmod(acc[k], c_[i], q_);
    }
    CycMod out(p_, prec_);
    for (int i = 0; i < p_ - 1; ++i) out.c_[i] = nt::submod(acc[i], acc[p_ - 1], q_);
    return out;
}

CycMod CycMod::inverse() const {
    if (c_sum_mod_p() == 0) throw std::domain_error("CycMod: inverse of a non-unit");
    // invert mod p via polynomial gcd with X^{p-1}+...+1, then Newton-lift
    u64 p = static_cast<u64>(p_);
    fpx::Poly f(c_.begin(), c_.end());
    for (auto& c : f) c %= p;
    fpx::Poly phi(p_, 1);
    auto [g, u] = fpx::half_egcd(fpx::trim(std::move(f)), phi, p);
    if (fpx::degree(g) != 0) throw std::domain_error("CycMod: inverse of a non-unit");
    std::vector<u64> raw(u.begin(), u.end());
    CycMod y(p_, prec_, raw);
    CycMod two = integer(p_, prec_, 2);
    int lifted = 1;
    while (lifted < prec_) {
        y = y * (two - *this * y);
        lifted *= 2;
    }
    return y;
}

CycMod CycMod::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(mpz_class(-e));
    CycMod r = integer(p_, prec_, 1);
    if (e == 0) return r;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
    }
    return r;
}

std::vector<u64> CycMod::lambda_coords() const {
    std::vector<u64> d(p_ - 1, 0);
    std::vector<u64> row(p_ - 1, 0);
    row[0] = 1;
    for (int k = 0; k < p_ - 1; ++k) {
        if (c_[k] != 0)
            for (int i = 0; i <= k; ++i) d[i] = nt::addmod(d[i], nt::mulmod(row[i], c_[k], q_), q_);
        for (int i = std::min(k + 1, p_ - 2); i >= 1; --i) row[i] = nt::addmod(row[i], row[i - 1], q_);
    }
    return d;
}

LambdaVal CycMod::lambda_valuation() const {
    const long cap = trusted_valuation_cap();
    std::vector<u64> d = lambda_coords();
    long best = std::numeric_limits<long>::max();
    u64 p = static_cast<u64>(p_);
    for (int i = 0; i < p_ - 1; ++i) {
        if (d[i] == 0) continue;  // contributes at least i + (p-1)*prec >= cap
        u64 x = d[i];
        long v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        best = std::min(best, i + static_cast<long>(p_ - 1) * v);
    }
    if (best >= cap) return {cap, true, false};
    return {best, false, false};
}

std::pair<u64, u64> CycMod::residue_mod_pi2() const {
    u64 p = static_cast<u64>(p_);
    u64 d0 = 0, d1 = 0;
    for (int k = 0; k < p_ - 1; ++k) {
        d0 = nt::addmod(d0, c_[k] % p, p);
        d1 = nt::addmod(d1, nt::mulmod(static_cast<u64>(k), c_[k] % p, p), p);
    }
    return {d0, d1};
}

u64 CycMod::c_sum_mod_p() const {
    u64 p = static_cast<u64>(p_);
    u64 s = 0;
    for (u64 c : c_) s = nt::addmod(s, c % p, p);
    return s;
}

CycMod reduce(const CycNum& x, int prec) {
    CycMod r = CycMod::zero(x.prime(), prec);
    std::vector<u64> raw(x.prime(), 0);
    for (int i = 0; i < x.prime() - 1; ++i) raw[i] = mpq_mod_u64(x.coeffs()[i], r.modulus());
    return CycMod(x.prime(), prec, raw);
}

}  // namespace kummerlab::cyclo
