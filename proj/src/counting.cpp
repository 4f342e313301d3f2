#include "cycstat/counting.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace cycstat {

Rat zeta_q_at(long q, int s) {
    if (s <= 1) throw std::domain_error("zeta_q has a pole at s = 1");
    Int qs = int_pow(Int(q), static_cast<unsigned long>(s - 1));
    return make_ratio(qs, qs - 1);
}

Int exact_count_squarefree(long q, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    if (d <= 1) return int_pow(Int(q), static_cast<unsigned long>(d));
    return int_pow(Int(q), static_cast<unsigned long>(d)) -
           int_pow(Int(q), static_cast<unsigned long>(d - 1));
}

Int exact_count_squarefree_nonmonic(long q, int d) {
    return (q - 1) * exact_count_squarefree(q, d);
}

Int exact_count_monic_prescribed(long q, int d, int ell) {
    if (ell < 0 || ell > d || ell > q)
        throw std::invalid_argument("prescribed-value count needs 0 <= ell <= min(d, q)");
    return int_pow(Int(q), static_cast<unsigned long>(d - ell));
}

Int exact_count_coprime_prescribed(const Field& f, int d, const Poly& u,
                                   std::span<const Fe> points, std::span<const Fe> values) {
    const long q = f.q();
    const int ell = static_cast<int>(points.size());
    if (values.size() != points.size())
        throw std::invalid_argument("points/values size mismatch");
    if (ell > d || ell > q)
        throw std::invalid_argument("prescribed-value count needs ell <= min(d, q)");
    std::set<Fe> seen;
    for (int i = 0; i < ell; ++i) {
        if (!seen.insert(points[i]).second) throw std::invalid_argument("points must be distinct");
        if (values[i] == 0) throw std::invalid_argument("prescribed values must be nonzero");
        if (poly_eval(f, u, points[i]) == 0)
            throw std::invalid_argument("points must avoid the roots of U");
    }
    auto ps = distinct_irreducible_factors(f, u);
    int rad_deg = 0;
    for (const auto& p : ps) rad_deg += p.degree();
    if (d < ell + rad_deg)
        throw std::invalid_argument("degree too small for the coprime-prescribed count");
    Rat r(int_pow(Int(q), static_cast<unsigned long>(d - ell)));
    for (const auto& p : ps) {
        Int pn = int_pow(Int(q), static_cast<unsigned long>(p.degree()));
        r *= make_ratio(pn - 1, pn);
    }
    if (r.get_den() != 1) throw std::logic_error("coprime-prescribed count not integral");
    return r.get_num();
}

namespace {

MainTermPrediction rational_prediction(Rat v, std::string statement,
                                       std::vector<std::pair<std::string, Rat>> exps) {
    MainTermPrediction p;
    p.rational_value = v;
    p.exact_rational = true;
    p.value = to_real(v);
    p.statement = std::move(statement);
    p.error_exponents = std::move(exps);
    return p;
}

}  // namespace

MainTermPrediction main_term_squarefree_prescribed(long q, int d, int ell, int m) {
    if (ell < 0 || m < 0 || ell + m > q)
        throw std::invalid_argument("need ell + m <= q");
    Rat one_minus = make_ratio(Int(q - 1), Int(q));
    Rat denom = zeta_q_at(q, 2) * rat_pow(Rat(1) - make_ratio(Int(1), Int(q) * q), ell + m);
    Rat v = rat_pow(one_minus, m) *
            make_ratio(int_pow(Int(q), static_cast<unsigned long>(d)),
                       int_pow(Int(q), static_cast<unsigned long>(m + ell))) /
            denom;
    return rational_prediction(
        v, "squarefree-prescribed(d=" + std::to_string(d) + ",l=" + std::to_string(ell) +
               ",m=" + std::to_string(m) + ")",
        {{"relative:(3m+2l-d)/2", make_ratio(Int(3 * m + 2 * ell - d), Int(2))}});
}

MainTermPrediction main_term_squarefree_k_roots(long q, int d, int k) {
    if (k < 0 || k > q) throw std::invalid_argument("need 0 <= k <= q");
    Rat v = Rat(binomial(static_cast<unsigned long>(q), static_cast<unsigned long>(k))) *
            make_ratio(int_pow(Int(q), static_cast<unsigned long>(d)),
                       int_pow(Int(q), static_cast<unsigned long>(k))) /
            (zeta_q_at(q, 2) * rat_pow(make_ratio(Int(q + 1), Int(q)), q));
    return rational_prediction(
        v, "squarefree-k-roots(d=" + std::to_string(d) + ",k=" + std::to_string(k) + ")",
        {{"relative:(k+2q-d)/2", make_ratio(Int(k + 2 * q - d), Int(2))}});
}

MainTermPrediction main_term_squarefree_coprime(const Field& f, int d, const Poly& u, int ell) {
    const long q = f.q();
    if (ell < 0 || ell > q) throw std::invalid_argument("need 0 <= ell <= q");
    Rat v = make_ratio(int_pow(Int(q), static_cast<unsigned long>(d)),
                       int_pow(Int(q), static_cast<unsigned long>(ell))) /
            (zeta_q_at(q, 2) * rat_pow(Rat(1) - make_ratio(Int(1), Int(q) * q), ell));
    for (const auto& p : distinct_irreducible_factors(f, u)) {
        Int pn = int_pow(Int(q), static_cast<unsigned long>(p.degree()));
        v *= make_ratio(pn, pn + 1);
    }
    return rational_prediction(v, "squarefree-coprime(d=" + std::to_string(d) + ",l=" + std::to_string(ell) + ")",
                               {{"absolute:d/2", make_ratio(Int(d), Int(2))},
                                {"relative:l-d/2", make_ratio(Int(2 * ell - d), Int(2))}});
}

namespace {

EulerProduct truncated_product(long q, int trunc_degree, std::string name,
                               const std::function<Rat(Int)>& factor_of_norm, int tail_scale) {
    if (trunc_degree < 1) throw std::invalid_argument("truncation degree must be >= 1");
    EulerProduct e;
    e.q = q;
    e.trunc_degree = trunc_degree;
    e.name = std::move(name);
    Real v(1, kRealBits);
    for (int n = 1; n <= trunc_degree; ++n) {
        Int norm = int_pow(Int(q), static_cast<unsigned long>(n));
        Rat base = factor_of_norm(norm);
        Int count = count_irreducibles(q, n);
        e.degree_factor.push_back(base);
        e.degree_count.push_back(count);
        v *= real_pow(to_real(base), count.get_ui());
    }
    e.value = v;
    // sum_{n>N} I_n * (per-factor mass) <= tail_scale * sum_{n>N} q^-n / n
    //          <= tail_scale * q^-N / ((N+1)(q-1))
    Rat tail = Rat(tail_scale) *
               make_ratio(Int(1), Int(trunc_degree + 1) * (Int(q) - 1) *
                                      int_pow(Int(q), static_cast<unsigned long>(trunc_degree)));
    e.tail_lower_factor = Rat(1) - tail;
    return e;
}

}  // namespace

EulerProduct euler_constant_K(long q, int trunc_degree) {
    return truncated_product(
        q, trunc_degree, "K",
        [](Int norm) {
            Int d = (norm + 1) * (norm + 1);
            return make_ratio(d - 1, d);
        },
        1);
}

EulerProduct euler_constant_L(long q, int r, int trunc_degree) {
    if (r < 2) throw std::invalid_argument("L_{r-1} needs r >= 2");
    return truncated_product(
        q, trunc_degree, "L_" + std::to_string(r - 1),
        [r](Int norm) {
            Rat v(1);
            for (int j = 1; j <= r - 1; ++j) {
                Int d = (norm + 1) * (norm + j);
                v *= make_ratio(d - j, d);
            }
            return v;
        },
        (r * (r - 1)) / 2);
}

MainTermPrediction main_term_component_prescribed(long q, const std::vector<int>& degrees, int ell,
                                                  int m, const EulerProduct& constant) {
    const int r = static_cast<int>(degrees.size());
    if (r < 1) throw std::invalid_argument("component needs at least one degree");
    if (ell < 0 || m < 0 || ell + m > q) throw std::invalid_argument("need ell + m <= q");
    int dsum = 0;
    for (int d : degrees) dsum += d;
    Rat pre = make_ratio(int_pow(Int(q), static_cast<unsigned long>(dsum)), Int(1)) /
              rat_pow(zeta_q_at(q, 2), r);
    pre *= rat_pow(make_ratio(Int(r), Int(q + r)), m);
    pre *= rat_pow(make_ratio(Int(q), Int(q + r) * (q - 1)), ell);

    MainTermPrediction p;
    p.exact_rational = false;
    p.rational_value = pre;  // the q-power and probability part, without the constant
    p.value = constant.value * to_real(pre);
    p.statement = "component-prescribed(r=" + std::to_string(r) + ",l=" + std::to_string(ell) +
                  ",m=" + std::to_string(m) + ")";
    int d1 = degrees[0];
    p.error_exponents = {{"relative:-d1/2+l+m", make_ratio(Int(2 * (ell + m) - d1), Int(2))}};
    for (int i = 1; i < r; ++i)
        p.error_exponents.push_back(
            {"relative:-(1-eps)d" + std::to_string(i + 1), Rat(-degrees[static_cast<size_t>(i)])});
    return p;
}

Rat char_pattern_probability(long q, int p, int m) {
    if (m < 0 || m > q) throw std::invalid_argument("need 0 <= m <= q");
    if ((q - 1) % p != 0)
        throw std::invalid_argument("character patterns need q = 1 mod p");
    return rat_pow(make_ratio(Int(p - 1), Int(q + p - 1)), m) *
           rat_pow(make_ratio(Int(q), Int(p) * (q + p - 1)), static_cast<long>(q) - m);
}

Rat value_pattern_probability(long q, int p, int m) {
    if (m < 0 || m > q) throw std::invalid_argument("need 0 <= m <= q");
    return rat_pow(make_ratio(Int(p - 1), Int(q + p - 1)), m) *
           rat_pow(make_ratio(Int(q), Int(q + p - 1) * (q - 1)), static_cast<long>(q) - m);
}

MainTermPrediction main_term_char_prescribed(long q, int p, const std::vector<int>& degrees,
                                             int m) {
    MainTermPrediction pred =
        rational_prediction(char_pattern_probability(q, p, m),
                            "char-pattern-probability(p=" + std::to_string(p) +
                                ",m=" + std::to_string(m) + ")",
                            {});
    int d1 = degrees.empty() ? 0 : degrees[0];
    pred.error_exponents = {{"relative:-(d1-m)/2+q", make_ratio(Int(2 * q - (d1 - m)), Int(2))}};
    for (size_t i = 1; i < degrees.size(); ++i)
        pred.error_exponents.push_back({"relative:-(1-eps)(d" + std::to_string(i + 1) + "-m)+eps*q",
                                        Rat(-(degrees[i] - m))});
    return pred;
}

Int residue_tuple_count(long q, int p) {
    if (p < 2) throw std::invalid_argument("cover order must be >= 2");
    return int_pow(Int(q), static_cast<unsigned long>(p - 2)) *
           int_pow(Int(q) - 1, static_cast<unsigned long>(p - 1)) * (Int(q) + p - 1);
}

Int brute_residue_tuple_count(const Field& f, int p, Fe t) {
    const long q = f.q();
    if (t < 0 || t >= q) throw std::invalid_argument("t not a field element");
    // Residues mod (X-t)^2 written as a + b(X-t); the value at t is a and
    // (X-t) divides the residue exactly when a = 0. Enumerate tuples of the
    // q^2 - 1 nonzero residues and admit those with at most one zero value.
    const long nres = q * q - 1;
    const int r = p - 1;
    // residue #k is (a, b) = ((k+1) / q, (k+1) % q), skipping (0,0);
    // a = 0 exactly for the first q-1 indices
    auto divisible = [q](long k) { return k < q - 1; };
    std::vector<long> idx(static_cast<size_t>(r), 0);
    int zeros = r;  // index 0 has a = 0 (q >= 2)
    long long total = 0;
    while (true) {
        if (zeros <= 1) ++total;
        int i = 0;
        while (i < r && idx[static_cast<size_t>(i)] == nres - 1) {
            if (divisible(idx[static_cast<size_t>(i)])) --zeros;
            idx[static_cast<size_t>(i)] = 0;
            ++zeros;  // index 0 is divisible
            ++i;
        }
        if (i == r) break;
        long& k = idx[static_cast<size_t>(i)];
        if (divisible(k)) --zeros;
        ++k;
        if (divisible(k)) ++zeros;
    }
    return Int(static_cast<long>(total));
}

std::map<Fe, Int> residue_value_distribution(const Field& f, int p, Fe t) {
    const long q = f.q();
    if (t < 0 || t >= q) throw std::invalid_argument("t not a field element");
    const int r = p - 1;
    // Only the value components a_i matter for F(t) = prod a_i^i; each a_i
    // carries q choices of the (X-t) coordinate when nonzero and q-1 when
    // zero (the pair (0,0) is excluded).
    std::map<Fe, Int> dist;
    std::vector<Fe> a(static_cast<size_t>(r), 0);
    while (true) {
        int zeros = 0;
        for (int i = 0; i < r; ++i)
            if (a[static_cast<size_t>(i)] == 0) ++zeros;
        if (zeros <= 1) {
            Int mult = 1;
            Fe v = 1;
            for (int i = 0; i < r; ++i) {
                Fe ai = a[static_cast<size_t>(i)];
                mult *= (ai == 0) ? (q - 1) : q;
                v = (v == 0 || ai == 0) ? 0 : f.mul(v, f.pow(ai, i + 1));
            }
            dist[v] += mult;
        }
        int i = 0;
        while (i < r && a[static_cast<size_t>(i)] == static_cast<Fe>(q - 1)) {
            a[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == r) break;
        ++a[static_cast<size_t>(i)];
    }
    return dist;
}

Rat heuristic_prob_zero(long q, int p) { return make_ratio(Int(p - 1), Int(q + p - 1)); }

Rat heuristic_prob_nonzero(long q, int p) {
    return make_ratio(Int(q), (Int(q) - 1) * (q + p - 1));
}

}  // namespace cycstat
