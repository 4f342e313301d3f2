#include "cycstat/trace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace cycstat {

Cyclo affine_char_sum(const Field& f, const FactorTuple& t, const MultCharacter& chi) {
    const int p = chi.order();
    if (p != t.cover_order())
        throw std::invalid_argument("character order does not match the cover order");
    Cyclo s(p);
    for (Fe x = 0; x < f.q(); ++x) {
        long e = 0;
        bool vanishes = false;
        for (size_t i = 0; i < t.factors.size(); ++i) {
            Fe v = poly_eval(f, t.factors[i], x);
            if (v == 0) {
                vanishes = true;
                break;
            }
            e += static_cast<long>(i + 1) * chi(v);
        }
        if (!vanishes) s += Cyclo::root(p, e);
    }
    return s;
}

namespace {

// target itself or target with exactly one degree dropped by one
int variant_of(const std::vector<int>& degrees, const std::vector<int>& target) {
    if (degrees.size() != target.size()) return -2;
    int drop = -1;
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] == target[i]) continue;
        if (degrees[i] == target[i] - 1 && drop == -1) {
            drop = static_cast<int>(i);
            continue;
        }
        return -2;
    }
    return drop;  // -1 for the full-degree member
}

}  // namespace

Fe infinity_value(const Field& f, const FactorTuple& t, Fe scale,
                  const std::vector<int>& target_degrees) {
    if (scale == 0) throw std::invalid_argument("scale must be a unit");
    if (variant_of(t.degrees(), target_degrees) == -2)
        throw std::invalid_argument("tuple is not in the closed family of the target");
    // value at zero of X^deg(F) F(1/X): the leading coefficient when
    // deg F = 0 mod p, and 0 otherwise. For a component target the full
    // member is exactly the 0 mod p case and every dropped variant gives 0.
    if (t.expanded_degree() % t.cover_order() != 0) return 0;
    Fe lead = 1;
    for (size_t i = 0; i < t.factors.size(); ++i)
        lead = f.mul(lead, f.pow(t.factors[i].leading(), static_cast<long>(i + 1)));
    return f.mul(scale, lead);
}

Cyclo projective_char_sum(const Field& f, const FactorTuple& t, Fe scale,
                          const MultCharacter& chi, const std::vector<int>& target_degrees) {
    const int p = chi.order();
    Cyclo s = affine_char_sum(f, t, chi);
    Fe inf = infinity_value(f, t, 1, target_degrees);
    if (inf != 0) s += Cyclo::root(p, chi(inf));
    // S-hat(alpha F) = chi(alpha) S-hat(F)
    int e = chi(scale);
    if (e == MultCharacter::kCharZero) throw std::invalid_argument("scale must be a unit");
    return s.rotated(e);
}

Cyclo frobenius_trace(const Field& f, const FactorTuple& t, Fe scale, const MultCharacter& chi,
                      const std::vector<int>& target_degrees) {
    return -projective_char_sum(f, t, scale, chi, target_degrees);
}

const ExtField& extension_of(const Field& base, int n) {
    static std::map<std::tuple<long, int, int>, ExtField> cache;
    static std::mutex mu;
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(base.characteristic(), base.ext_degree(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    ExtField ext;
    ext.field = Field::make(base.characteristic(), base.ext_degree() * n);
    ext.embed.resize(static_cast<size_t>(base.q()));
    if (base.ext_degree() == 1) {
        // prime subfield indices coincide
        for (Fe x = 0; x < base.q(); ++x) ext.embed[static_cast<size_t>(x)] = x;
    } else {
        // image of the class of X: the smallest root of the base modulus
        const auto& mod = base.modulus();
        Fe root = 0;
        bool found = false;
        for (Fe z = 0; z < ext.field.q() && !found; ++z) {
            Fe acc = 0;
            for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i)
                acc = ext.field.add(ext.field.mul(acc, z),
                                    ext.field.from_int(mod[static_cast<size_t>(i)]));
            if (acc == 0) {
                root = z;
                found = true;
            }
        }
        if (!found) throw FieldError("internal error: base modulus has no root in extension");
        const long p = base.characteristic();
        for (Fe x = 0; x < base.q(); ++x) {
            Fe acc = 0;
            long rem = x;
            std::vector<long> digits(static_cast<size_t>(base.ext_degree()));
            for (int i = 0; i < base.ext_degree(); ++i) {
                digits[static_cast<size_t>(i)] = rem % p;
                rem /= p;
            }
            for (int i = base.ext_degree() - 1; i >= 0; --i)
                acc = ext.field.add(ext.field.mul(acc, root),
                                    ext.field.from_int(digits[static_cast<size_t>(i)]));
            ext.embed[static_cast<size_t>(x)] = acc;
        }
    }
    return cache.emplace(key, std::move(ext)).first->second;
}

long long point_count_extension(const Field& base, const FactorTuple& t, Fe scale, int p, int n,
                                const std::vector<int>& target_degrees) {
    if (p != t.cover_order()) throw std::invalid_argument("cover order mismatch");
    const ExtField& ext = extension_of(base, n);
    const Field& E = ext.field;
    const long Q = E.q();
    const bool has_pth_roots = (Q - 1) % p == 0;
    const long cls = has_pth_roots ? (Q - 1) / p : 0;

    auto fiber = [&](Fe c) -> long long {
        if (c == 0) return 1;
        if (!has_pth_roots) return 1;
        return (E.log(c) % p == 0) ? p : 0;
    };

    // lift factors coefficientwise
    std::vector<Poly> lifted;
    lifted.reserve(t.factors.size());
    for (const auto& g : t.factors) {
        std::vector<Fe> c(g.coeffs());
        for (auto& x : c) x = ext.embed[static_cast<size_t>(x)];
        lifted.emplace_back(c);
    }
    const Fe scale_e = ext.embed[static_cast<size_t>(scale)];

    long long count = 0;
    for (Fe x = 0; x < Q; ++x) {
        Fe v = scale_e;
        for (size_t i = 0; i < lifted.size(); ++i) {
            Fe w = poly_eval(E, lifted[i], x);
            if (w == 0) {
                v = 0;
                break;
            }
            v = E.mul(v, E.pow(w, static_cast<long>(i + 1)));
        }
        count += fiber(v);
    }
    Fe inf = infinity_value(base, t, scale, target_degrees);
    count += fiber(ext.embed[static_cast<size_t>(inf)]);
    (void)cls;
    return count;
}

namespace {

// rational polynomials, lowest degree first; exact arithmetic for the
// square-free decomposition of the zeta numerator
using QPoly = std::vector<Rat>;

void q_trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int q_deg(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly q_derivative(const QPoly& a) {
    QPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
    q_trim(d);
    return d;
}

QPoly q_divexact(const QPoly& a, const QPoly& b) {
    QPoly rem = a, quot(a.size(), Rat(0));
    q_trim(rem);
    while (q_deg(rem) >= q_deg(b)) {
        Rat c = rem.back() / b.back();
        int k = q_deg(rem) - q_deg(b);
        quot[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= q_deg(b); ++i)
            rem[static_cast<size_t>(k + i)] -= c * b[static_cast<size_t>(i)];
        q_trim(rem);
        if (rem.empty()) break;
    }
    if (!rem.empty()) throw std::logic_error("inexact polynomial division");
    q_trim(quot);
    return quot;
}

QPoly q_rem(QPoly a, const QPoly& b) {
    q_trim(a);
    while (q_deg(a) >= q_deg(b) && !a.empty()) {
        Rat c = a.back() / b.back();
        int k = q_deg(a) - q_deg(b);
        for (int i = 0; i <= q_deg(b); ++i)
            a[static_cast<size_t>(k + i)] -= c * b[static_cast<size_t>(i)];
        q_trim(a);
    }
    return a;
}

QPoly q_gcd(QPoly a, QPoly b) {
    q_trim(a);
    q_trim(b);
    while (!b.empty()) {
        QPoly r = q_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// Yun's algorithm: P = prod A_i^i with the A_i square-free and coprime.
std::vector<std::pair<QPoly, int>> q_squarefree_decomposition(const QPoly& p) {
    std::vector<std::pair<QPoly, int>> out;
    if (q_deg(p) < 1) return out;
    QPoly dp = q_derivative(p);
    QPoly g = q_gcd(p, dp);
    if (q_deg(g) == 0) {
        out.emplace_back(p, 1);
        return out;
    }
    QPoly c = q_divexact(p, g);
    QPoly d = q_divexact(dp, g);
    QPoly cd = q_derivative(c);
    QPoly w(d.size() > cd.size() ? d.size() : cd.size(), Rat(0));
    for (size_t i = 0; i < w.size(); ++i) {
        if (i < d.size()) w[i] += d[i];
        if (i < cd.size()) w[i] -= cd[i];
    }
    q_trim(w);
    int i = 1;
    while (q_deg(c) > 0) {
        QPoly a = q_gcd(c, w);
        if (q_deg(a) > 0) out.emplace_back(a, i);
        c = q_divexact(c, a.empty() ? QPoly{Rat(1)} : a);
        QPoly t = q_divexact(w, a.empty() ? QPoly{Rat(1)} : a);
        QPoly cd2 = q_derivative(c);
        QPoly w2(t.size() > cd2.size() ? t.size() : cd2.size(), Rat(0));
        for (size_t s = 0; s < w2.size(); ++s) {
            if (s < t.size()) w2[s] += t[s];
            if (s < cd2.size()) w2[s] -= cd2[s];
        }
        q_trim(w2);
        w = std::move(w2);
        ++i;
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const std::vector<double>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(coeffs[static_cast<size_t>(i)] / coeffs.back()));
    radius = 1.0 + radius;
    for (int k = 0; k < n; ++k) {
        double arg = 2.0 * M_PI * (k + 0.25) / n + 0.4;
        z[static_cast<size_t>(k)] = std::polar(radius, arg);
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v(0.0, 0.0);
        for (int i = n; i >= 0; --i) v = v * x + coeffs[static_cast<size_t>(i)];
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0.0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> num = eval(z[static_cast<size_t>(k)]) / coeffs.back();
            std::complex<double> den(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != k) den *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
            std::complex<double> d = num / den;
            z[static_cast<size_t>(k)] -= d;
            shift = std::max(shift, std::abs(d));
        }
        if (shift < 1e-14) break;
    }
    return z;
}

ZetaData zeta_from_counts(const std::vector<long long>& counts, long q, int g) {
    if (g < 0) throw std::invalid_argument("negative genus");
    ZetaData zd;
    zd.genus = g;
    zd.q = q;
    zd.point_counts = counts;
    if (static_cast<int>(counts.size()) < 2 * g)
        throw std::invalid_argument("need point counts over 2g extensions");

    // power sums of the reciprocal roots
    std::vector<Int> ps(static_cast<size_t>(2 * g) + 1, 0);
    for (int i = 1; i <= 2 * g; ++i)
        ps[static_cast<size_t>(i)] =
            int_pow(Int(q), static_cast<unsigned long>(i)) + 1 - static_cast<long>(counts[static_cast<size_t>(i - 1)]);

    // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) ps_i e_{k-i}
    std::vector<Int> e(static_cast<size_t>(2 * g) + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= 2 * g; ++k) {
        Int acc = 0;
        for (int i = 1; i <= k; ++i) {
            Int term = ps[static_cast<size_t>(i)] * e[static_cast<size_t>(k - i)];
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        if (acc % k != 0) throw IntegrityError("Newton recursion is not integral");
        e[static_cast<size_t>(k)] = acc / k;
    }
    zd.p_coeffs.resize(static_cast<size_t>(2 * g) + 1);
    for (int k = 0; k <= 2 * g; ++k) {
        zd.p_coeffs[static_cast<size_t>(k)] = (k % 2 == 0) ? e[static_cast<size_t>(k)] : -e[static_cast<size_t>(k)];
    }

    // functional equation a_{2g-i} = q^(g-i) a_i
    for (int i = 0; i <= g; ++i) {
        if (zd.p_coeffs[static_cast<size_t>(2 * g - i)] !=
            int_pow(Int(q), static_cast<unsigned long>(g - i)) * zd.p_coeffs[static_cast<size_t>(i)])
            throw IntegrityError("functional equation fails: point counts are inconsistent");
    }

    if (g > 0) {
        // repeated reciprocal roots are common (squares of abelian-surface
        // factors, say), and they ruin the numeric accuracy of any direct
        // root finder; peel the multiplicity off exactly first
        QPoly p(zd.p_coeffs.size());
        for (size_t i = 0; i < p.size(); ++i) p[i] = Rat(zd.p_coeffs[i]);
        double dev = 0.0;
        const double sq = std::sqrt(static_cast<double>(q));
        for (const auto& [factor, mult] : q_squarefree_decomposition(p)) {
            std::vector<double> c(factor.size());
            for (size_t i = 0; i < c.size(); ++i) c[i] = factor[i].get_d();
            for (auto r : complex_roots(c)) {  // zeros of P, i.e. 1/alpha_j
                std::complex<double> alpha = 1.0 / r;
                for (int m = 0; m < mult; ++m) zd.roots.push_back(alpha);
                dev = std::max(dev, std::abs(std::abs(alpha) - sq));
            }
        }
        if (static_cast<int>(zd.roots.size()) != 2 * g)
            throw IntegrityError("root multiplicities do not sum to 2g");
        zd.max_weil_deviation = dev;
        if (dev >= 1e-9) throw IntegrityError("reciprocal roots violate |alpha| = sqrt(q)");
    }
    return zd;
}

}  // namespace cycstat
