#include "doctest.h"

#include <map>

#include "kummerlab/bernoulli.hpp"
#include "oracles.hpp"

using namespace kummerlab;

TEST_CASE("small Bernoulli residues") {
    auto b5 = bernoulli::bernoulli_even_mod_p(5);
    REQUIRE(b5.size() == 1);
    CHECK(b5.at(2) == 1);  // B_2 = 1/6, 6^{-1} = 1 mod 5

    auto b7 = bernoulli::bernoulli_even_mod_p(7);
    for (const auto& [k, r] : b7) CHECK(r != 0);

    auto b37 = bernoulli::bernoulli_even_mod_p(37);
    CHECK(b37.at(32) == 0);

    CHECK_THROWS_AS(bernoulli::bernoulli_even_mod_p(2), std::invalid_argument);
}

TEST_CASE("production residues match the exact recurrence for p <= 50") {
    auto exact = oracles::bernoulli_exact(50);
    for (int p = 5; p <= 50; p += 2) {
        if (!nt::is_prime(p)) continue;
        auto mine = bernoulli::bernoulli_even_mod_p(p);
        for (int n = 2; n <= p - 3; n += 2) {
            CHECK(mine.at(n) == oracles::rational_mod(exact[n], p));
        }
    }
}

TEST_CASE("irregular pairs at small scale") {
    CHECK(bernoulli::irregular_pairs(5).empty());
    CHECK(bernoulli::irregular_pairs(7).empty());

    auto p37 = bernoulli::irregular_pairs(37);
    REQUIRE(p37.size() == 1);
    CHECK(p37[0].two_m == 32);
    CHECK(p37[0].mu_plus == 7);    // 2^32 mod 37
    CHECK(p37[0].mu_minus == 32);  // 2^5 mod 37

    auto p157 = bernoulli::irregular_pairs(157);
    REQUIRE(p157.size() == 2);
    CHECK(p157[0].two_m == 62);
    CHECK(p157[1].two_m == 110);
}

TEST_CASE("pair eigenvalues are recomputable from (v, 2m) and multiply to v") {
    for (int p : {37, 59, 67, 101, 103, 131, 149, 157}) {
        int v = bernoulli::primitive_root(p);
        for (const auto& pr : bernoulli::irregular_pairs(p)) {
            CHECK(pr.mu_plus == nt::powmod(v, pr.two_m, p));
            CHECK(pr.mu_minus == nt::powmod(v, p - pr.two_m, p));
            CHECK(nt::mulmod(pr.mu_plus, pr.mu_minus, p) == static_cast<nt::u64>(v % p));
        }
    }
}

TEST_CASE("primitive roots against a brute-force order check") {
    CHECK(bernoulli::primitive_root(5) == 2);
    CHECK(bernoulli::primitive_root(7) == 3);
    CHECK(bernoulli::primitive_root(37) == 2);
    for (int p : {5, 7, 37, 59, 101}) {
        int v = bernoulli::primitive_root(p);
        CHECK(oracles::order_brute(v, p) == p - 1);
        for (int w = 2; w < v; ++w) CHECK(oracles::order_brute(w, p) != p - 1);
    }
}

TEST_CASE("Kummer congruence spot check against the exact oracle") {
    // indices congruent mod p-1 with equal B/index residues; the partner
    // index beyond p-3 comes from the exact recurrence
    auto exact = oracles::bernoulli_exact(60);
    int checked = 0;
    for (int p : {7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        auto mine = bernoulli::bernoulli_even_mod_p(p);
        for (int n = 2; n <= p - 3; n += 2) {
            for (int n2 = n + (p - 1); n2 <= 60; n2 += (p - 1)) {
                if (n2 % (p - 1) == 0) continue;
                unsigned long lhs = oracles::rational_mod(mpq_class(exact[n]) / n, p);
                unsigned long rhs = oracles::rational_mod(mpq_class(exact[n2]) / n2, p);
                CHECK(lhs == rhs);
                CHECK(mine.at(n) == oracles::rational_mod(exact[n], p));
                ++checked;
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("index normalization reflects odd residues") {
    auto n37 = bernoulli::normalize_even_index(37, 19);  // (p+1)/2, odd
    CHECK(n37.index == 18);
    CHECK(n37.reflected);

    auto even = bernoulli::normalize_even_index(37, 32 + 36);
    CHECK(even.index == 32);
    CHECK(!even.reflected);

    CHECK_THROWS_AS(bernoulli::normalize_even_index(37, 36), std::domain_error);
    CHECK_THROWS_AS(bernoulli::normalize_even_index(37, 1), std::domain_error);
}

TEST_CASE("scan is order-stable and mode-independent") {
    auto par = bernoulli::scan_irregular(160, RunMode::parallel);
    auto ser = bernoulli::scan_irregular(160, RunMode::serial);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].p == ser[i].p);
        CHECK(par[i].two_m == ser[i].two_m);
    }
    std::map<int, std::vector<int>> expect = {{37, {32}},  {59, {44}},  {67, {58}},
                                              {101, {68}}, {103, {24}}, {131, {22}},
                                              {149, {130}}, {157, {62, 110}}};
    std::map<int, std::vector<int>> got;
    for (const auto& pr : par) got[pr.p].push_back(pr.two_m);
    CHECK(got == expect);
}
