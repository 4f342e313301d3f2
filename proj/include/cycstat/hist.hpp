#pragma once

#include <map>

#include "cycstat/cyclo.hpp"
#include "cycstat/rational.hpp"

namespace cycstat {

// Exact-rational-weighted mass function on Z[zeta_p]; the common currency of
// empirical and predicted distributions. Counting histograms carry integer
// masses, distributions carry total mass 1.
struct Histogram {
    std::map<Cyclo, Rat> bins;

    void add(const Cyclo& s, const Rat& mass) {
        auto [it, inserted] = bins.emplace(s, mass);
        if (!inserted) {
            it->second += mass;
            if (it->second == 0) bins.erase(it);
        }
    }

    Rat total() const {
        Rat t(0);
        for (const auto& [s, m] : bins) t += m;
        return t;
    }

    bool is_normalized() const { return total() == 1; }

    Histogram normalized() const {
        Rat t = total();
        if (t == 0) throw std::domain_error("cannot normalize an empty histogram");
        Histogram h;
        for (const auto& [s, m] : bins) h.bins.emplace(s, m / t);
        return h;
    }

    // The histogram with support multiplied by zeta_p^e.
    Histogram rotated(int e) const {
        Histogram h;
        for (const auto& [s, m] : bins) h.add(s.rotated(e), m);
        return h;
    }

    Histogram conjugated() const {
        Histogram h;
        for (const auto& [s, m] : bins) h.add(s.conj(), m);
        return h;
    }

    friend bool operator==(const Histogram& a, const Histogram& b) { return a.bins == b.bins; }

    // Merge of disjoint or overlapping mass functions; associative and
    // commutative, so parallel partial histograms combine in any order.
    void merge(const Histogram& o) {
        for (const auto& [s, m] : o.bins) add(s, m);
    }
};

// (1/2) sum |h1(s) - h2(s)| over the union support; requires both normalized.
inline Rat tv_distance(const Histogram& a, const Histogram& b) {
    if (!a.is_normalized() || !b.is_normalized())
        throw std::invalid_argument("tv_distance needs normalized histograms");
    Rat t(0);
    auto ia = a.bins.begin();
    auto ib = b.bins.begin();
    while (ia != a.bins.end() || ib != b.bins.end()) {
        if (ib == b.bins.end() || (ia != a.bins.end() && ia->first < ib->first)) {
            t += abs(ia->second);
            ++ia;
        } else if (ia == a.bins.end() || ib->first < ia->first) {
            t += abs(ib->second);
            ++ib;
        } else {
            t += abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return t / 2;
}

// Exact mixed moment of a distribution on Z[zeta_p]: the value
//   E[(S/sqrt(n))^j (conj(S)/sqrt(n))^k]
// with the integer part n^floor((j+k)/2) of the normalization divided out
// exactly; when j+k is odd a single 1/sqrt(n) remains pending and is
// recorded in half_power rather than approximated.
struct MomentValue {
    CycloQ value;
    bool half_power = false;
    int n = 0;

    bool is_rational() const { return value.is_rational(); }
    Rat rational() const { return value.rational_part(); }
    double approx() const {
        double v = value.to_complex().real();
        return half_power ? v / std::sqrt(static_cast<double>(n)) : v;
    }
};

inline MomentValue hist_mixed_moment(const Histogram& h, int n, int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("moment orders must be nonnegative");
    Rat t = h.total();
    if (t == 0) throw std::domain_error("moment of an empty histogram");
    int p = h.bins.empty() ? 2 : h.bins.begin()->first.prime();
    CycloQ acc(p);
    for (const auto& [s, m] : h.bins) {
        CycloBig term = to_big(s).pow(static_cast<unsigned long>(j)) *
                        to_big(s).conj().pow(static_cast<unsigned long>(k));
        CycloQ tq = to_rational(term);
        tq.scale(m);
        acc += tq;
    }
    acc.scale(Rat(1) / t);
    MomentValue mv;
    mv.n = n;
    mv.half_power = ((j + k) % 2) != 0;
    Rat norm = make_ratio(Int(1), int_pow(Int(n), static_cast<unsigned long>((j + k) / 2)));
    acc.scale(norm);
    mv.value = acc;
    return mv;
}

}  // namespace cycstat
