#include <doctest.h>

#include <set>

#include "cycstat/poly.hpp"

using namespace cycstat;

TEST_CASE("evaluation and ring operations") {
    Field f = Field::make(7, 1);
    Poly x({0, 1});
    CHECK(poly_eval(f, x, 3) == 3);
    Poly a({1, 0, 1});  // X^2 + 1
    CHECK(poly_eval(f, a, 3) == 3);  // 9 + 1 = 10 = 3 mod 7
    CHECK(poly_eval(f, Poly(), 5) == 0);
    Poly prod = poly_mul(f, a, x);
    CHECK(prod.degree() == 3);
    for (Fe t = 0; t < 7; ++t)
        CHECK(poly_eval(f, prod, t) == f.mul(poly_eval(f, a, t), poly_eval(f, x, t)));
}

TEST_CASE("gcd basics") {
    Field f = Field::make(7, 1);
    Poly x2m1({6, 0, 1});  // X^2 - 1
    Poly xm1({6, 1});      // X - 1
    CHECK(poly_gcd(f, x2m1, xm1) == xm1);
    CHECK(poly_gcd(f, Poly({0, 1}), Poly({1, 1})).degree() == 0);
    // gcd(F, F) is the monic scaling of F
    Poly g({2, 4, 3});
    CHECK(poly_gcd(f, g, g) == poly_monic(f, g));
    CHECK_THROWS_AS(poly_gcd(f, Poly(), Poly()), std::invalid_argument);
}

TEST_CASE("square-free tests, including the derivative degeneracy") {
    Field f = Field::make(7, 1);
    CHECK(is_squarefree(f, Poly({0, 1, 1})));  // X^2 + X: roots 0, -1
    Poly sq = poly_mul(f, Poly({6, 1}), Poly({6, 1}));  // (X-1)^2
    CHECK_FALSE(is_squarefree(f, sq));
    // X^7 - X splits into 7 distinct linear factors
    std::vector<Fe> c(8, 0);
    c[1] = 6;
    c[7] = 1;
    CHECK(is_squarefree(f, Poly(c)));
    // X^7 is a 7th power with zero derivative
    std::vector<Fe> c2(8, 0);
    c2[7] = 1;
    CHECK_FALSE(is_squarefree(f, Poly(c2)));
    CHECK_THROWS_AS(is_squarefree(f, Poly()), std::invalid_argument);

    Field f4 = Field::make(2, 2);
    // (X+1)^2 = X^2 + 1 in characteristic 2
    CHECK_FALSE(is_squarefree(f4, Poly({1, 0, 1})));
    CHECK(is_squarefree(f4, Poly({1, 1, 1})));
}

TEST_CASE("monic enumeration counts and order") {
    Field f = Field::make(7, 1);
    auto l0 = monic_list(f, 0);
    REQUIRE(l0.size() == 1);
    CHECK(l0[0] == Poly::one());
    CHECK(monic_list(f, 2).size() == 49);
    Field f4 = Field::make(2, 2);
    CHECK(monic_list(f4, 3).size() == 64);
    // each exactly once
    auto l2 = monic_list(f, 2);
    std::set<std::vector<Fe>> seen;
    for (const auto& a : l2) {
        CHECK(a.is_monic());
        CHECK(a.degree() == 2);
        CHECK(seen.insert(a.coeffs()).second);
    }
}

TEST_CASE("square-free family sizes match the counting formula") {
    Field f = Field::make(7, 1);
    CHECK(squarefree_list(f, 3).size() == 294);
    CHECK(squarefree_list(f, 1).size() == 7);
    Field f4 = Field::make(2, 2);
    CHECK(squarefree_list(f4, 2).size() == 12);
}

TEST_CASE("factor tuple enumeration") {
    Field f = Field::make(7, 1);
    long long n10 = 0;
    for_each_factor_tuple(f, {1, 0}, [&](const FactorTuple&) { ++n10; });
    CHECK(n10 == 7);
    long long n11 = 0;
    for_each_factor_tuple(f, {1, 1}, [&](const FactorTuple& t) {
        ++n11;
        CHECK(t.satisfies_invariants(f));
    });
    CHECK(n11 == 42);  // 7 roots for F_1, 6 coprime choices for F_2

    // brute-force oracle over all pairs for q = 4
    Field f4 = Field::make(2, 2);
    long long brute = 0;
    for (const Poly& a : squarefree_list(f4, 2))
        for (const Poly& b : squarefree_list(f4, 1))
            if (poly_gcd(f4, a, b).degree() == 0) ++brute;
    long long n21 = 0;
    for_each_factor_tuple(f4, {2, 1}, [&](const FactorTuple&) { ++n21; });
    CHECK(n21 == brute);
    CHECK(n21 == 36);
}

TEST_CASE("tuple invariants and expanded product") {
    Field f = Field::make(7, 1);
    int n = 0;
    for_each_factor_tuple(f, {2, 1}, [&](const FactorTuple& t) {
        if (++n > 40) return;
        CHECK(t.expanded_degree() == 4);
        Poly F = expand(f, t);
        CHECK(F.degree() == 4);
        for (Fe x = 0; x < 7; ++x) CHECK(poly_eval(f, F, x) == t.value_at(f, x));
    });
}

TEST_CASE("prefix partition is a partition of the stream") {
    Field f = Field::make(7, 1);
    std::vector<std::vector<int>> degrees = {{2, 2}, {3, 1}};
    for (const auto& d : degrees) {
        std::multiset<std::pair<std::vector<Fe>, std::vector<Fe>>> whole, chunked;
        for_each_factor_tuple(f, d, [&](const FactorTuple& t) {
            whole.insert({t.factors[0].coeffs(), t.factors[1].coeffs()});
        });
        for (int chunks : {3, 7, 16}) {
            chunked.clear();
            for (int c = 0; c < chunks; ++c)
                for_each_factor_tuple_chunk(f, d, chunks, c, [&](const FactorTuple& t) {
                    chunked.insert({t.factors[0].coeffs(), t.factors[1].coeffs()});
                });
            CHECK(whole == chunked);
        }
    }
}

TEST_CASE("irreducible counts: necklace formula vs sieve") {
    CHECK(count_irreducibles(7, 1) == 7);
    CHECK(count_irreducibles(7, 2) == 21);  // (49 - 7) / 2
    CHECK(count_irreducibles(4, 3) == 20);  // (64 - 4) / 3
    Field f = Field::make(7, 1);
    auto irr = irreducibles_up_to(f, 3);
    long long per_degree[4] = {0, 0, 0, 0};
    for (const auto& p : irr) {
        ++per_degree[p.degree()];
        CHECK(p.is_monic());
    }
    CHECK(per_degree[1] == 7);
    CHECK(per_degree[2] == 21);
    CHECK(to_int(per_degree[3]) == count_irreducibles(7, 3));
    CHECK(irr.size() >= 28);  // 7 + 21 at degree <= 2

    Field f4 = Field::make(2, 2);
    auto irr4 = irreducibles_up_to(f4, 2);
    CHECK(irr4.size() == 10);  // 4 linear + (16-4)/2 = 6 quadratics
}

TEST_CASE("distinct irreducible factors") {
    Field f = Field::make(7, 1);
    Poly u = poly_mul(f, poly_mul(f, Poly({0, 1}), Poly({0, 1})), Poly({6, 1}));  // X^2 (X-1)
    auto ps = distinct_irreducible_factors(f, u);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0] == Poly({0, 1}));
    CHECK(ps[1] == Poly({6, 1}));
    CHECK(distinct_irreducible_factors(f, Poly::one()).empty());
}
