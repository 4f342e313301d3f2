#include <doctest.h>

#include "cycstat/counting.hpp"
#include "cycstat/experiment.hpp"
#include "cycstat/moduli.hpp"

using namespace cycstat;

TEST_CASE("zeta_q values and pole") {
    CHECK(zeta_q_at(7, 2) == Rat(7, 6));
    CHECK(zeta_q_at(4, 2) == Rat(4, 3));
    CHECK(zeta_q_at(7, 3) == Rat(49, 48));
    CHECK_THROWS_AS(zeta_q_at(7, 1), std::domain_error);
}

TEST_CASE("square-free counts") {
    CHECK(exact_count_squarefree(7, 3) == 294);
    CHECK(exact_count_squarefree(7, 1) == 7);
    CHECK(exact_count_squarefree(4, 5) == 768);
    Field f4 = Field::make(2, 2);
    CHECK(brute_squarefree_count(f4, 5) == 768);
    CHECK(exact_count_squarefree_nonmonic(5, 3) == 400);
    CHECK(exact_count_squarefree_nonmonic(5, 1) == 20);
    CHECK(exact_count_squarefree_nonmonic(7, 2) == 252);
    CHECK(exact_count_squarefree_nonmonic(7, 2) == 6 * exact_count_squarefree(7, 2));
}

TEST_CASE("prescribed-value counts on V_d") {
    CHECK(exact_count_monic_prescribed(7, 3, 2) == 7);
    CHECK(exact_count_monic_prescribed(7, 3, 0) == 343);
    CHECK(exact_count_monic_prescribed(4, 4, 4) == 1);
    CHECK_THROWS_AS(exact_count_monic_prescribed(7, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(exact_count_monic_prescribed(3, 5, 4), std::invalid_argument);
    // exhaustive check at ell = 2 over F_5
    Field f = Field::make(5, 1);
    auto counts = prescribed_value_counts(f, 3, {0, 2});
    CHECK(counts.size() == 25);
    for (const auto& [vals, n] : counts) CHECK(n == 5);  // 5^(3-2)
}

TEST_CASE("coprime prescribed counts") {
    Field f = Field::make(7, 1);
    Poly X({0, 1});
    std::vector<Fe> pts{1};
    std::vector<Fe> vals{1};
    CHECK(exact_count_coprime_prescribed(f, 4, X, pts, vals) == 294);  // 7^3 * 6/7
    CHECK(exact_count_coprime_prescribed(f, 3, Poly::one(), pts, vals) == 49);
    Poly XXm1 = poly_mul(f, X, Poly({6, 1}));
    CHECK(exact_count_coprime_prescribed(f, 4, XXm1) == 1764);  // 7^4 (6/7)^2
    // brute force at d = 4, U = X, value 3 at x = 2
    long long brute = 0;
    for_each_monic(f, 4, [&](const Poly& a) {
        if (poly_eval(f, a, 0) != 0 && poly_eval(f, a, 2) == 3) ++brute;
    });
    std::vector<Fe> p2{2}, v2{3};
    CHECK(to_int(brute) == exact_count_coprime_prescribed(f, 4, X, p2, v2));
    // a root of U is rejected as a sample point
    std::vector<Fe> bad{0};
    CHECK_THROWS_AS(exact_count_coprime_prescribed(f, 4, X, bad, vals), std::invalid_argument);
    // zero prescribed values are rejected
    std::vector<Fe> zero_val{0};
    CHECK_THROWS_AS(exact_count_coprime_prescribed(f, 4, X, pts, zero_val), std::invalid_argument);
}

TEST_CASE("square-free prescribed main term") {
    // with no constraints the main term is exactly |F_d|
    auto p = main_term_squarefree_prescribed(7, 5, 0, 0);
    CHECK(p.exact_rational);
    CHECK(p.rational_value == Rat(exact_count_squarefree(7, 5)));
    auto p2 = main_term_squarefree_prescribed(7, 6, 1, 0);
    Rat expected = Rat(7 * 7 * 7 * 7 * 7) / (zeta_q_at(7, 2) * Rat(48, 49));
    CHECK(p2.rational_value == expected);
    auto p3 = main_term_squarefree_prescribed(7, 6, 1, 1);
    CHECK(p3.rational_value == Rat(7 * 7 * 7 * 7) * Rat(6, 7) / (zeta_q_at(7, 2) * Rat(48, 49) * Rat(48, 49)));
    // relative error shrinks when d grows with (l, m) fixed
    Field f = Field::make(7, 1);
    std::vector<Fe> pts{0, 1, 2};
    double prev = 1e9;
    for (int d : {5, 7}) {
        auto counts = prescribed_value_counts_squarefree(f, d, pts);
        long long n = counts.count({1, 2, 0}) ? counts[{1, 2, 0}] : 0;
        auto mt = main_term_squarefree_prescribed(7, d, 2, 1);
        double dev = std::abs(n / mt.rational_value.get_d() - 1);
        CHECK(dev < prev);
        prev = dev;
    }
}

TEST_CASE("k-roots main term") {
    auto p = main_term_squarefree_k_roots(7, 9, 0);
    Rat expected = Rat(int_pow(Int(7), 9)) / (zeta_q_at(7, 2) * rat_pow(Rat(8, 7), 7));
    CHECK(p.rational_value == expected);
    CHECK(binomial(7, 7) == 1);
    // trend at q = 4 where exhaustive filtering stays cheap
    Field f4 = Field::make(2, 2);
    double prev = 1e9;
    for (int d : {8, 10}) {
        long long n = 0;
        for_each_monic(f4, d, [&](const Poly& a) {
            if (!is_squarefree(f4, a)) return;
            int roots = 0;
            for (Fe x = 0; x < 4; ++x)
                if (poly_eval(f4, a, x) == 0) ++roots;
            if (roots == 1) ++n;
        });
        auto mt = main_term_squarefree_k_roots(4, d, 1);
        double dev = std::abs(n / mt.rational_value.get_d() - 1);
        CHECK(dev < prev);
        prev = dev;
    }
}

TEST_CASE("square-free coprime main term") {
    Field f = Field::make(7, 1);
    // U = 1 reduces to the plain square-free prescribed main term
    auto a = main_term_squarefree_coprime(f, 6, Poly::one(), 2);
    auto b = main_term_squarefree_prescribed(7, 6, 2, 0);
    CHECK(a.rational_value == b.rational_value);
    // irreducible quadratic factor
    Field f4 = Field::make(2, 2);
    auto irr = irreducibles_up_to(f4, 2);
    Poly u;
    for (const auto& p : irr)
        if (p.degree() == 2) { u = p; break; }
    auto c = main_term_squarefree_coprime(f4, 6, u, 0);
    CHECK(c.rational_value == Rat(int_pow(Int(4), 6)) / zeta_q_at(4, 2) * Rat(16, 17));
    // shrinking relative error for U = X, ell = 1 as d grows
    Poly X({0, 1});
    double prev = 1e9;
    for (int d : {4, 6, 8}) {
        long long n = 0;
        for_each_monic(f, d, [&](const Poly& g) {
            if (is_squarefree(f, g) && poly_eval(f, g, 0) != 0 && poly_eval(f, g, 1) == 1) ++n;
        });
        auto mt = main_term_squarefree_coprime(f, d, X, 1);
        double dev = std::abs(n / mt.rational_value.get_d() - 1);
        CHECK(dev < prev);
        prev = dev;
    }
}

TEST_CASE("Euler product K") {
    auto k1 = euler_constant_K(7, 1);
    CHECK(k1.degree_factor[0] == Rat(63, 64));
    CHECK(k1.degree_count[0] == 7);
    Real expect = real_pow(to_real(Rat(63, 64)), 7);
    Real diff = k1.value - expect;
    CHECK(std::abs(diff.get_d()) < 1e-40);
    // partial products decrease monotonically
    Real prev = k1.value;
    for (int n = 2; n <= 8; ++n) {
        auto kn = euler_constant_K(7, n);
        CHECK(kn.value < prev);
        CHECK(kn.tail_lower_factor > 0);
        CHECK(kn.tail_lower_factor < 1);
        prev = kn.value;
    }
    CHECK_THROWS_AS(euler_constant_K(7, 0), std::invalid_argument);
}

TEST_CASE("L_1 equals K factor by factor") {
    auto k = euler_constant_K(7, 10);
    auto l = euler_constant_L(7, 2, 10);
    for (int n = 0; n < 10; ++n) CHECK(k.degree_factor[n] == l.degree_factor[n]);
    // all L factors lie in (0,1), so partial products strictly decrease
    auto l3 = euler_constant_L(7, 3, 8);
    Real prev(2, kRealBits);
    for (int n = 1; n <= 8; ++n) {
        auto ln = euler_constant_L(7, 3, n);
        CHECK(ln.degree_factor[n - 1] > 0);
        CHECK(ln.degree_factor[n - 1] < 1);
        CHECK(ln.value < prev);
        prev = ln.value;
    }
    CHECK_THROWS_AS(euler_constant_L(7, 1, 5), std::invalid_argument);
}

TEST_CASE("L_2 main term against brute triple-factor counts") {
    Field f = Field::make(7, 1);
    Budget b(1000000000LL);
    auto L2 = euler_constant_L(7, 3, 10);
    double prev = 1e9;
    for (auto degs : std::vector<std::vector<int>>{{2, 1, 1}, {3, 2, 1}, {4, 2, 2}}) {
        Int n = family_count(f, degs, b);
        int dsum = 0;
        for (int d : degs) dsum += d;
        Real main = L2.value * to_real(Rat(int_pow(Int(7), static_cast<unsigned long>(dsum))) /
                                       rat_pow(zeta_q_at(7, 2), 3));
        Real ratio = to_real(Rat(n)) / main;
        double dev = std::abs(ratio.get_d() - 1.0);
        CHECK(dev < prev);
        prev = dev;
    }
}

TEST_CASE("component main term and probability forms") {
    auto K = euler_constant_K(7, 10);
    auto mt = main_term_component_prescribed(7, {4, 1}, 0, 0, K);
    Real expect = K.value * to_real(Rat(int_pow(Int(7), 5)) / rat_pow(zeta_q_at(7, 2), 2));
    Real diff = mt.value - expect;
    CHECK(std::abs(diff.get_d()) < 1e-30);
    // probability forms
    CHECK(char_pattern_probability(7, 3, 0) == rat_pow(Rat(7, 27), 7));
    CHECK(value_pattern_probability(7, 3, 7) == rat_pow(Rat(2, 9), 7));
    // both pattern measures have total mass exactly 1
    Rat char_total(0), value_total(0);
    for (int m = 0; m <= 7; ++m) {
        Rat ways(binomial(7, static_cast<unsigned long>(m)));
        char_total += ways * Rat(int_pow(Int(3), static_cast<unsigned long>(7 - m))) *
                      char_pattern_probability(7, 3, m);
        value_total += ways * Rat(int_pow(Int(6), static_cast<unsigned long>(7 - m))) *
                       value_pattern_probability(7, 3, m);
    }
    CHECK(char_total == 1);
    CHECK(value_total == 1);
    CHECK_THROWS_AS(char_pattern_probability(5, 3, 0), std::invalid_argument);
}

TEST_CASE("residue tuple counts against the closed form") {
    CHECK(residue_tuple_count(7, 3) == 2268);  // 7 * 36 * 9
    CHECK(residue_tuple_count(7, 2) == 48);    // q^2 - 1
    CHECK(residue_tuple_count(4, 3) == 216);
    CHECK(residue_tuple_count(11, 5) == 199650000);
    Field f7 = Field::make(7, 1);
    CHECK(brute_residue_tuple_count(f7, 3, 0) == 2268);
    CHECK(brute_residue_tuple_count(f7, 3, 4) == 2268);  // independent of t
    CHECK(brute_residue_tuple_count(f7, 2, 0) == 48);
    Field f4 = Field::make(2, 2);
    CHECK(brute_residue_tuple_count(f4, 3, 0) == 216);
}

TEST_CASE("residue value distribution matches the heuristic probabilities") {
    for (auto [ch, deg, p] : {std::tuple<long, int, int>{7, 1, 3}, {2, 2, 3}, {7, 1, 2}}) {
        Field f = Field::make(ch, deg);
        auto dist = residue_value_distribution(f, p, 1);
        Int total = 0;
        for (const auto& [v, n] : dist) total += n;
        CHECK(total == residue_tuple_count(f.q(), p));
        CHECK(make_ratio(dist[0], total) == heuristic_prob_zero(f.q(), p));
        for (Fe v = 1; v < f.q(); ++v)
            CHECK(make_ratio(dist[v], total) == heuristic_prob_nonzero(f.q(), p));
    }
}
