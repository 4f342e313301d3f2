#include "cycstat/poly.hpp"

#include <map>
#include <mutex>

namespace cycstat {

Fe poly_eval(const Field& f, const Poly& a, Fe x) {
    Fe v = 0;
    for (int i = a.degree(); i >= 0; --i) v = f.add(f.mul(v, x), a.coeff(i));
    return v;
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    std::vector<Fe> c(static_cast<size_t>(std::max(a.degree(), b.degree())) + 1, 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(c);
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
    std::vector<Fe> c(static_cast<size_t>(std::max(a.degree(), b.degree())) + 1, 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(c);
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Fe> c(static_cast<size_t>(a.degree() + b.degree()) + 1, 0);
    for (int i = 0; i <= a.degree(); ++i) {
        Fe ai = a.coeff(i);
        if (ai == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            size_t k = static_cast<size_t>(i + j);
            c[k] = f.add(c[k], f.mul(ai, b.coeff(j)));
        }
    }
    return Poly(c);
}

std::pair<Poly, Poly> poly_divrem(const Field& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Fe> rem(a.coeffs());
    std::vector<Fe> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
    const Fe lead_inv = f.inv(b.leading());
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Fe c = f.mul(rem[static_cast<size_t>(k + b.degree())], lead_inv);
        quot[static_cast<size_t>(k)] = c;
        if (c == 0) continue;
        for (int i = 0; i <= b.degree(); ++i) {
            size_t idx = static_cast<size_t>(k + i);
            rem[idx] = f.sub(rem[idx], f.mul(c, b.coeff(i)));
        }
    }
    return {Poly(quot), Poly(rem)};
}

Poly poly_derivative(const Field& f, const Poly& a) {
    if (a.degree() <= 0) return Poly();
    std::vector<Fe> c(static_cast<size_t>(a.degree()), 0);
    for (int i = 1; i <= a.degree(); ++i) {
        // i*c_i means adding c_i to itself i times in the field
        Fe m = f.mul(f.from_int(i), a.coeff(i));
        c[static_cast<size_t>(i - 1)] = m;
    }
    return Poly(c);
}

Poly poly_monic(const Field& f, const Poly& a) {
    if (a.is_zero()) return a;
    if (a.leading() == 1) return a;
    Fe s = f.inv(a.leading());
    std::vector<Fe> c(a.coeffs());
    for (auto& x : c) x = f.mul(x, s);
    return Poly(c);
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: gcd(0, 0)");
    while (!b.is_zero()) {
        Poly r = poly_divrem(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

bool is_squarefree(const Field& f, const Poly& a) {
    if (a.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    if (a.degree() == 0) return true;
    Poly d = poly_derivative(f, a);
    if (d.is_zero()) return false;  // p-th power in characteristic p
    return poly_gcd(f, a, d).degree() == 0;
}

bool FactorTuple::satisfies_invariants(const Field& f) const {
    for (const auto& g : factors) {
        if (!g.is_monic() || !is_squarefree(f, g)) return false;
    }
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j) {
            if (factors[i].degree() == 0 || factors[j].degree() == 0) continue;
            if (poly_gcd(f, factors[i], factors[j]).degree() > 0) return false;
        }
    return true;
}

Poly expand(const Field& f, const FactorTuple& t) {
    Poly r = Poly::one();
    for (size_t i = 0; i < t.factors.size(); ++i)
        for (size_t k = 0; k < i + 1; ++k) r = poly_mul(f, r, t.factors[i]);
    return r;
}

std::vector<Poly> monic_list(const Field& f, int d) {
    std::vector<Poly> out;
    long n = 1;
    for (int i = 0; i < d; ++i) n *= f.q();
    out.reserve(static_cast<size_t>(n));
    for_each_monic(f, d, [&](const Poly& a) { out.push_back(a); });
    return out;
}

const std::vector<Poly>& squarefree_list(const Field& f, int d) {
    static std::map<std::pair<long, int>, std::vector<Poly>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(f.q(), d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Poly> out;
    for_each_monic(f, d, [&](const Poly& a) {
        if (is_squarefree(f, a)) out.push_back(a);
    });
    return cache.emplace(key, std::move(out)).first->second;
}

namespace {

int mobius(long n) {
    int m = 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

}  // namespace

Int count_irreducibles(long q, int n) {
    if (n < 1) throw std::invalid_argument("count_irreducibles: degree must be >= 1");
    Int total = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = mobius(d);
        if (mu == 0) continue;
        total += mu * int_pow(Int(q), static_cast<unsigned long>(n / d));
    }
    return total / n;
}

std::vector<Poly> irreducibles_up_to(const Field& f, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("irreducibles_up_to: degree must be >= 1");
    if (max_degree > 8) throw std::invalid_argument("irreducibles_up_to: degree too large to sieve");
    std::vector<Poly> irr;
    for (int d = 1; d <= max_degree; ++d) {
        for_each_monic(f, d, [&](const Poly& a) {
            for (const Poly& p : irr) {
                if (2 * p.degree() > d) break;
                if (poly_divrem(f, a, p).second.is_zero()) return;
            }
            irr.push_back(a);
        });
    }
    return irr;
}

std::vector<Poly> distinct_irreducible_factors(const Field& f, Poly u) {
    if (u.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
    std::vector<Poly> out;
    if (u.degree() < 1) return out;
    auto irr = irreducibles_up_to(f, u.degree());
    for (const Poly& p : irr) {
        if (u.degree() < p.degree()) break;
        auto [quot, rem] = poly_divrem(f, u, p);
        if (rem.is_zero()) {
            out.push_back(p);
            do {
                u = quot;
                std::tie(quot, rem) = poly_divrem(f, u, p);
            } while (u.degree() >= p.degree() && rem.is_zero());
        }
    }
    return out;
}

}  // namespace cycstat
