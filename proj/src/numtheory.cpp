#include "kummerlab/numtheory.hpp"

#include <stdexcept>

namespace kummerlab::nt {

u64 powmod(u64 a, const mpz_class& e, u64 q) {
    if (e < 0) {
        mpz_class pos = -e;
        return powmod(invmod(a % q, q), pos, q);
    }
    u64 r = 1 % q;
    a %= q;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = mulmod(r, r, q);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, a, q);
    }
    return r;
}

u64 invmod(u64 a, u64 q) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(q), newr = static_cast<std::int64_t>(a % q);
    while (newr != 0) {
        std::int64_t quo = r / newr;
        std::int64_t tmp = t - quo * newt;
        t = newt;
        newt = tmp;
        tmp = r - quo * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("invmod: argument is not a unit");
    if (t < 0) t += static_cast<std::int64_t>(q);
    return static_cast<u64>(t);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    for (u64 d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

bool is_primitive_root(u64 v, u64 p) {
    if (v % p == 0) return false;
    for (u64 f : distinct_prime_factors(p - 1)) {
        if (powmod(v, (p - 1) / f, p) == 1) return false;
    }
    return true;
}

int least_primitive_root(u64 p) {
    if (p == 2) return 1;
    for (u64 v = 2; v < p; ++v) {
        if (is_primitive_root(v, p)) return static_cast<int>(v);
    }
    throw std::logic_error("least_primitive_root: no generator found");
}

long multiplicative_order(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw std::domain_error("multiplicative_order: zero element");
    u64 x = a;
    long n = 1;
    while (x != 1) {
        x = mulmod(x, a, p);
        ++n;
        if (static_cast<u64>(n) > p) throw std::logic_error("multiplicative_order: no order found");
    }
    return n;
}

long discrete_log(u64 a, u64 base, u64 p) {
    a %= p;
    u64 x = 1;
    for (u64 n = 0; n < p; ++n) {
        if (x == a) return static_cast<long>(n);
        x = mulmod(x, base, p);
    }
    return -1;
}

u64 pow_checked(u64 base, int exp, u64 limit) {
    u64 r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > limit / base) throw std::overflow_error("pow_checked: modulus exceeds supported range");
        r *= base;
    }
    if (r >= limit) throw std::overflow_error("pow_checked: modulus exceeds supported range");
    return r;
}

}  // namespace kummerlab::nt
