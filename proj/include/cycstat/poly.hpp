#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cycstat/gf.hpp"
#include "cycstat/rational.hpp"

namespace cycstat {

// Dense polynomial over F_q, coefficients lowest degree first. The zero
// polynomial has an empty coefficient vector and degree -1. Polynomials do
// not carry their field; every operation takes it explicitly.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Fe> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Fe v) { return v == 0 ? Poly() : Poly({v}); }
    static Poly one() { return Poly({1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Fe leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == 1; }
    Fe coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<size_t>(i)];
    }
    const std::vector<Fe>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  private:
    std::vector<Fe> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

Fe poly_eval(const Field& f, const Poly& a, Fe x);
Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divrem(const Field& f, const Poly& a, const Poly& b);
Poly poly_derivative(const Field& f, const Poly& a);
Poly poly_monic(const Field& f, const Poly& a);

// Monic gcd; throws if both arguments are zero.
Poly poly_gcd(const Field& f, Poly a, Poly b);

// gcd(F, F') test with the char-p degeneracy: F' = 0 means F is a p-th
// power, square-free only when constant. Throws on the zero polynomial.
bool is_squarefree(const Field& f, const Poly& a);

// Family member (F_1, ..., F_r) of monic square-free pairwise-coprime
// polynomials representing F = prod F_i^i, a cover Y^p = F(X) with p = r+1.
struct FactorTuple {
    std::vector<Poly> factors;

    int rank() const { return static_cast<int>(factors.size()); }
    int cover_order() const { return rank() + 1; }
    std::vector<int> degrees() const {
        std::vector<int> d;
        d.reserve(factors.size());
        for (const auto& g : factors) d.push_back(g.degree());
        return d;
    }
    // deg of the expanded product, sum of i*d_i.
    int expanded_degree() const {
        int s = 0;
        for (size_t i = 0; i < factors.size(); ++i) s += static_cast<int>(i + 1) * factors[i].degree();
        return s;
    }
    Fe value_at(const Field& f, Fe x) const {
        Fe v = 1;
        for (size_t i = 0; i < factors.size(); ++i) {
            Fe w = poly_eval(f, factors[i], x);
            if (w == 0) return 0;
            v = f.mul(v, f.pow(w, static_cast<long>(i + 1)));
        }
        return v;
    }
    bool satisfies_invariants(const Field& f) const;
};

// Expanded product prod F_i^i; test oracle, the tuple form is what the
// enumeration pipeline carries.
Poly expand(const Field& f, const FactorTuple& t);

// Monic polynomials of degree d in a fixed order: the k-th polynomial has
// coefficient of X^i equal to digit i of k in base q, so the coefficient of
// X^(d-1) is the most significant digit. Enumeration and prefix-based
// partitioning both follow this index.
template <class Fn>
void for_each_monic(const Field& f, int d, Fn&& fn) {
    if (d < 0) throw std::invalid_argument("for_each_monic: negative degree");
    std::vector<Fe> c(static_cast<size_t>(d) + 1, 0);
    c[static_cast<size_t>(d)] = 1;
    const long q = f.q();
    while (true) {
        fn(Poly(c));
        int i = 0;
        while (i < d && c[static_cast<size_t>(i)] == static_cast<Fe>(q - 1)) {
            c[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == d) break;
        ++c[static_cast<size_t>(i)];
    }
}

std::vector<Poly> monic_list(const Field& f, int d);

// Members of the square-free family of degree d, in enumeration order.
// Cached per (q, d); the cache is read-only after first construction.
const std::vector<Poly>& squarefree_list(const Field& f, int d);

template <class Fn>
void for_each_squarefree(const Field& f, int d, Fn&& fn) {
    for (const Poly& a : squarefree_list(f, d)) fn(a);
}

// All tuples (F_1,...,F_r) with F_i monic square-free of degree degrees[i]
// and pairwise coprime, each exactly once, ordered lexicographically by the
// per-factor enumeration indices. The chunked form restricts F_1 to the
// [chunk, chunk+1)/n_chunks slice of its list, so the union over chunks is
// the whole stream; chunks can be consumed by independent workers.
template <class Fn>
void for_each_factor_tuple_chunk(const Field& f, const std::vector<int>& degrees, int n_chunks,
                                 int chunk, Fn&& fn) {
    for (int d : degrees)
        if (d < 0) throw std::invalid_argument("factor tuple: negative degree");
    const size_t r = degrees.size();
    if (r == 0) throw std::invalid_argument("factor tuple: empty degree vector");
    std::vector<const std::vector<Poly>*> lists(r);
    for (size_t i = 0; i < r; ++i) lists[i] = &squarefree_list(f, degrees[i]);

    const size_t n1 = lists[0]->size();
    size_t begin = n1 * static_cast<size_t>(chunk) / static_cast<size_t>(n_chunks);
    size_t end = n1 * static_cast<size_t>(chunk + 1) / static_cast<size_t>(n_chunks);

    FactorTuple t;
    t.factors.resize(r);
    // depth-first over factor slots with incremental coprimality checks
    auto extend = [&](auto&& self, size_t slot) -> void {
        if (slot == r) {
            fn(t);
            return;
        }
        for (const Poly& g : *lists[slot]) {
            bool ok = true;
            for (size_t j = 0; j < slot; ++j) {
                if (t.factors[j].degree() == 0 || g.degree() == 0) continue;
                if (poly_gcd(f, t.factors[j], g).degree() > 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            t.factors[slot] = g;
            self(self, slot + 1);
        }
    };
    for (size_t i1 = begin; i1 < end; ++i1) {
        t.factors[0] = (*lists[0])[i1];
        extend(extend, 1);
    }
}

template <class Fn>
void for_each_factor_tuple(const Field& f, const std::vector<int>& degrees, Fn&& fn) {
    for_each_factor_tuple_chunk(f, degrees, 1, 0, std::forward<Fn>(fn));
}

// Number of monic irreducibles of degree n: (1/n) sum_{d|n} mu(d) q^(n/d).
Int count_irreducibles(long q, int n);

// Monic irreducibles of degree 1..max_degree, ordered by (degree, index).
// Sieve by trial division, so only sensible at small degree.
std::vector<Poly> irreducibles_up_to(const Field& f, int max_degree);

// Distinct monic irreducible divisors of U.
std::vector<Poly> distinct_irreducible_factors(const Field& f, Poly u);

}  // namespace cycstat
