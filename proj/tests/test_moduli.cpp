#include <doctest.h>

#include "cycstat/experiment.hpp"
#include "cycstat/moduli.hpp"

using namespace cycstat;

TEST_CASE("component combinatorics") {
    auto c4 = components_for_genus(4, 3);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].degrees == std::vector<int>{6, 0});
    CHECK(c4[1].degrees == std::vector<int>{3, 3});
    auto c3 = components_for_genus(3, 3);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].degrees == std::vector<int>{4, 1});
    auto c2 = components_for_genus(2, 2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].degrees == std::vector<int>{5});
    CHECK(c2[1].degrees == std::vector<int>{6});
    // canonical order swaps (1,4) to (4,1)
    CHECK(ComponentIndex::make(3, {1, 4}).degrees == std::vector<int>{4, 1});
}

TEST_CASE("genus and ramification counts") {
    CHECK(genus_of({4, 1}, 3) == std::pair<int, int>{5, 3});
    CHECK(genus_of({3, 1}, 3) == std::pair<int, int>{5, 3});
    CHECK(genus_of({2, 2}, 3) == std::pair<int, int>{4, 2});
    CHECK(genus_of({2, 1, 0, 1}, 5) == std::pair<int, int>{5, 6});
    CHECK(genus_of({5}, 2) == std::pair<int, int>{6, 2});
    CHECK(genus_of({6}, 2) == std::pair<int, int>{6, 2});
}

TEST_CASE("signature round trip") {
    CHECK(signature_of(ComponentIndex::make(3, {4, 1})) == std::pair<int, int>{2, 1});
    CHECK(signature_of(ComponentIndex::make(3, {3, 3})) == std::pair<int, int>{2, 2});
    CHECK(degrees_of_signature(2, 1) == std::vector<int>{4, 1});
    CHECK(degrees_of_signature(2, 2) == std::vector<int>{3, 3});
    CHECK_THROWS_AS(signature_of(ComponentIndex::make(2, {5})), std::invalid_argument);
}

TEST_CASE("closed family variants") {
    auto v = closed_family_variants({3, 3});
    REQUIRE(v.size() == 3);
    CHECK(v[0] == std::vector<int>{3, 3});
    CHECK(v[1] == std::vector<int>{2, 3});
    CHECK(v[2] == std::vector<int>{3, 2});
    auto v2 = closed_family_variants({3, 0});
    REQUIRE(v2.size() == 2);  // the (3,-1) variant is empty
    CHECK(v2[1] == std::vector<int>{2, 0});
}

TEST_CASE("weighted component size from brute counts") {
    Field f = Field::make(7, 1);
    Budget b;
    ComponentIndex c30 = ComponentIndex::make(3, {3, 0});
    // (q-1)(|F_(3,0)| + |F_(2,0)|) / (q(q^2-1))
    Int f30 = family_count(f, {3, 0}, b);
    Int f20 = family_count(f, {2, 0}, b);
    CHECK(f30 == 294);  // square-free cubics
    CHECK(f20 == 42);
    CHECK(weighted_component_size(f, c30, b) == make_ratio(6 * (f30 + f20), Int(7 * 48)));
    // hyperelliptic: closed forms for both degree classes
    Field f5 = Field::make(5, 1);
    ComponentIndex h = ComponentIndex::make(2, {5});
    CHECK(weighted_component_size(f5, h, b) ==
          make_ratio(exact_count_squarefree_nonmonic(5, 5) + exact_count_squarefree_nonmonic(5, 6),
                     Int(5 * 24)));
}

TEST_CASE("empirical trace distribution of a small component") {
    Field f = Field::make(7, 1);
    MultCharacter chi = MultCharacter::make(f, 3);
    Budget b;
    ComponentIndex c = ComponentIndex::make(3, {2, 2});
    EmpiricalReport rep = empirical_trace_distribution(f, c, chi, 2, b);

    // histogram mass equals the twisted closed-family size
    CHECK(Rat(rep.family_size) == rep.hist.total());
    CHECK(rep.family_size == closed_family_count(f, c.degrees, b));
    // by-hand alpha loop gives the identical histogram
    Histogram brute;
    for (const auto& degs : closed_family_variants(c.degrees)) {
        long w = 0;
        for (size_t i = 0; i < degs.size(); ++i) w += static_cast<long>(i + 1) * degs[i];
        bool full = w % 3 == 0;
        for_each_factor_tuple(f, degs, [&](const FactorTuple& t) {
            Cyclo s = affine_char_sum(f, t, chi);
            if (full) s += Cyclo::root(3, 0);
            for (Fe al = 1; al < 7; ++al) brute.add(s.rotated(chi(al)), Rat(1));
        });
    }
    CHECK(rep.hist == brute);

    // exact rotation invariance, support radius, weighted size
    CHECK(rep.hist.rotated(1) == rep.hist);
    for (const auto& [s, m] : rep.hist.bins) CHECK(std::abs(s.to_complex()) <= 8 + 1e-9);
    CHECK(rep.weighted_size == make_ratio(rep.family_size, Int(7 * 48)));
    CHECK(rep.genus_advisory);  // genus 2 < 5
}

TEST_CASE("conjugate character mirrors the histogram") {
    Field f = Field::make(7, 1);
    MultCharacter chi = MultCharacter::make(f, 3);
    Budget b;
    ComponentIndex c = ComponentIndex::make(3, {2, 2});
    EmpiricalReport rep = empirical_trace_distribution(f, c, chi, 1, b);
    EmpiricalReport repbar = empirical_trace_distribution(f, c, chi.conjugate(), 1, b);
    CHECK(repbar.hist == rep.hist.conjugated());
}

TEST_CASE("affine distribution against the n = q model") {
    Field f = Field::make(7, 1);
    MultCharacter chi = MultCharacter::make(f, 3);
    Budget b;
    EmpiricalReport r11 = affine_trace_distribution(f, {1, 1}, chi, 2, b);
    CHECK(Rat(r11.family_size) == Rat(42));
    CHECK(r11.n_vars == 7);
    for (const auto& [s, m] : r11.hist.bins) CHECK(std::abs(s.to_complex()) <= 7 + 1e-9);
    EmpiricalReport r22 = affine_trace_distribution(f, {2, 2}, chi, 2, b);
    // convergence toward the model improves with the degrees
    CHECK(r22.tv < r11.tv);
}

TEST_CASE("empirical moments: twist vanishing and hyperelliptic symmetry") {
    Field f = Field::make(7, 1);
    MultCharacter chi = MultCharacter::make(f, 3);
    Budget b;
    EmpiricalReport rep =
        empirical_trace_distribution(f, ComponentIndex::make(3, {2, 2}), chi, 2, b);
    CHECK(empirical_mixed_moment(rep, 1, 0).value.is_zero());
    CHECK(empirical_mixed_moment(rep, 2, 1).value.is_zero());
    CHECK(empirical_mixed_moment(rep, 2, 2).is_rational());

    Field f5 = Field::make(5, 1);
    EmpiricalReport hyper = hyperelliptic_trace_distribution(f5, 1, 2, b);
    CHECK(hyper.hist.rotated(1) == hyper.hist);  // symmetric about 0
    CHECK(Rat(hyper.family_size) ==
          Rat(exact_count_squarefree_nonmonic(5, 3) + exact_count_squarefree_nonmonic(5, 4)));
    CHECK(empirical_mixed_moment(hyper, 1, 0).value.is_zero());
    CHECK(empirical_mixed_moment(hyper, 3, 0).value.is_zero());
    EmpiricalReport hyper2 = hyperelliptic_trace_distribution(f5, 2, 2, b);
    CHECK(hyper2.tv < hyper.tv);
}

TEST_CASE("tv distance") {
    Histogram a, b;
    a.add(Cyclo::integer(3, 0), Rat(1, 2));
    a.add(Cyclo::integer(3, 1), Rat(1, 2));
    CHECK(tv_distance(a, a) == 0);
    b.add(Cyclo::integer(3, 2), Rat(1));
    CHECK(tv_distance(a, b) == 1);
    CHECK(tv_distance(b, a) == 1);
    Histogram c;
    c.add(Cyclo::integer(3, 0), Rat(1));
    CHECK(tv_distance(a, c) == Rat(1, 2));
    Histogram unnorm;
    unnorm.add(Cyclo::integer(3, 0), Rat(2));
    CHECK_THROWS_AS(tv_distance(a, unnorm), std::invalid_argument);
}

TEST_CASE("worker count does not change the histogram") {
    Field f = Field::make(7, 1);
    MultCharacter chi = MultCharacter::make(f, 3);
    ComponentIndex c = ComponentIndex::make(3, {3, 1});
    std::vector<EmpiricalReport> reps;
    for (int w : {1, 4, 16}) {
        Budget b;
        reps.push_back(empirical_trace_distribution(f, c, chi, w, b));
    }
    CHECK(reps[0].hist == reps[1].hist);
    CHECK(reps[0].hist == reps[2].hist);
    CHECK(reps[0].tv == reps[1].tv);
    CHECK(reps[0].tv == reps[2].tv);
}

TEST_CASE("budget exhaustion raises") {
    Field f = Field::make(7, 1);
    MultCharacter chi = MultCharacter::make(f, 3);
    Budget tiny(10);
    CHECK_THROWS_AS(
        empirical_trace_distribution(f, ComponentIndex::make(3, {3, 3}), chi, 2, tiny),
        BudgetExceeded);
}
