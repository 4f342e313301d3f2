#include "cycstat/gf.hpp"

#include <algorithm>
#include <string>

namespace cycstat {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Dense polynomials over the prime field F_p, coefficients lowest degree
// first. Only what modulus search needs; full polynomial arithmetic over
// arbitrary F_q lives in poly.hpp.
using PfPoly = std::vector<int>;

void pf_trim(PfPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod b, b monic.
PfPoly pf_rem(PfPoly a, const PfPoly& b, long p) {
    pf_trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        long c = a[da];
        if (c != 0) {
            for (int i = 0; i <= db; ++i) {
                long v = a[da - db + i] - c * b[i];
                v %= p;
                if (v < 0) v += p;
                a[da - db + i] = static_cast<int>(v);
            }
        }
        a.pop_back();
        pf_trim(a);
        if (a.empty()) break;
    }
    return a;
}

bool pf_is_zero(const PfPoly& a) { return a.empty(); }

// Trial division by every monic polynomial of degree 1..deg/2.
bool pf_is_irreducible(const PfPoly& f, long p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long k = 0; k < count; ++k) {
            PfPoly g(static_cast<size_t>(d) + 1, 0);
            long t = k;
            for (int i = 0; i < d; ++i) {
                g[static_cast<size_t>(i)] = static_cast<int>(t % p);
                t /= p;
            }
            g[static_cast<size_t>(d)] = 1;
            if (pf_is_zero(pf_rem(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

Fe Field::add_digits(Fe a, Fe b) const {
    Fe r = 0;
    long place = 1;
    for (int i = 0; i < deg_; ++i) {
        long da = (a / place) % char_;
        long db = (b / place) % char_;
        long s = da + db;
        if (s >= char_) s -= char_;
        r += static_cast<Fe>(s * place);
        place *= char_;
    }
    return r;
}

Fe Field::neg_digits(Fe a) const {
    Fe r = 0;
    long place = 1;
    for (int i = 0; i < deg_; ++i) {
        long da = (a / place) % char_;
        long s = da == 0 ? 0 : char_ - da;
        r += static_cast<Fe>(s * place);
        place *= char_;
    }
    return r;
}

Fe Field::mul_poly(Fe a, Fe b) const {
    if (deg_ == 1) return static_cast<Fe>((static_cast<long>(a) * b) % char_);
    // schoolbook product of digit vectors, then reduction by the modulus
    std::vector<long> da(deg_), db(deg_);
    long x = a, y = b;
    for (int i = 0; i < deg_; ++i) {
        da[i] = x % char_;
        x /= char_;
        db[i] = y % char_;
        y /= char_;
    }
    std::vector<long> prod(2 * static_cast<size_t>(deg_) - 1, 0);
    for (int i = 0; i < deg_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < deg_; ++j) prod[i + j] += da[i] * db[j];
    }
    for (int k = 2 * deg_ - 2; k >= deg_; --k) {
        long c = prod[k] % char_;
        if (c == 0) continue;
        // X^k = X^(k-deg) * (X^deg mod modulus) = -X^(k-deg) * (lower part)
        for (int i = 0; i < deg_; ++i) {
            prod[k - deg_ + i] -= c * modulus_[static_cast<size_t>(i)];
        }
        prod[k] = 0;
    }
    Fe r = 0;
    long place = 1;
    for (int i = 0; i < deg_; ++i) {
        long v = prod[i] % char_;
        if (v < 0) v += char_;
        r += static_cast<Fe>(v * place);
        place *= char_;
    }
    return r;
}

Fe Field::pow_poly(Fe a, long e) const {
    Fe r = 1;
    Fe b = a;
    while (e) {
        if (e & 1) r = mul_poly(r, b);
        b = mul_poly(b, b);
        e >>= 1;
    }
    return r;
}

Fe Field::pow(Fe a, long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw FieldError("inverse of zero");
        return 0;
    }
    long m = (log_[a] * static_cast<long>(e % (q_ - 1))) % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[m];
}

Field Field::make(long characteristic, int ext_degree) {
    if (!is_prime(characteristic))
        throw FieldError("characteristic " + std::to_string(characteristic) + " is not prime");
    if (ext_degree < 1) throw FieldError("extension degree must be positive");

    Field f;
    f.char_ = characteristic;
    f.deg_ = ext_degree;
    f.q_ = 1;
    for (int i = 0; i < ext_degree; ++i) {
        f.q_ *= characteristic;
        if (f.q_ > (1L << 24)) throw FieldError("field too large");
    }

    if (ext_degree > 1) {
        // candidates ordered by the base-p integer whose digits are the
        // non-leading coefficients, top coefficient most significant
        long count = f.q_;
        bool found = false;
        for (long k = 0; k < count; ++k) {
            PfPoly cand(static_cast<size_t>(ext_degree) + 1, 0);
            long t = k;
            for (int i = 0; i < ext_degree; ++i) {
                cand[static_cast<size_t>(i)] = static_cast<int>(t % characteristic);
                t /= characteristic;
            }
            cand[static_cast<size_t>(ext_degree)] = 1;
            if (pf_is_irreducible(cand, characteristic)) {
                f.modulus_ = cand;
                found = true;
                break;
            }
        }
        if (!found) throw FieldError("internal error: no irreducible modulus found");
    }

    // smallest-index generator of the unit group
    const long n = f.q_ - 1;
    auto factors = prime_factors(n);
    f.gen_ = 0;
    for (Fe cand = 1; cand < f.q_; ++cand) {
        bool ok = true;
        for (long r : factors) {
            if (f.pow_poly(cand, n / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            f.gen_ = cand;
            break;
        }
    }
    if (f.gen_ == 0 && f.q_ > 2) throw FieldError("internal error: no generator found");
    if (f.q_ == 2) f.gen_ = 1;

    f.exp_.resize(static_cast<size_t>(n));
    f.log_.assign(static_cast<size_t>(f.q_), -1);
    Fe cur = 1;
    for (long k = 0; k < n; ++k) {
        f.exp_[static_cast<size_t>(k)] = cur;
        f.log_[static_cast<size_t>(cur)] = k;
        cur = f.mul_poly(cur, f.gen_);
    }
    if (cur != 1) throw FieldError("internal error: generator order mismatch");
    return f;
}

MultCharacter MultCharacter::make(const Field& field, int order) {
    if (order < 1) throw FieldError("character order must be positive");
    if ((field.q() - 1) % order != 0)
        throw FieldError("no character of order " + std::to_string(order) + " over F_" +
                         std::to_string(field.q()) + ": requires q = 1 mod " +
                         std::to_string(order));
    MultCharacter chi;
    chi.order_ = order;
    chi.table_.assign(static_cast<size_t>(field.q()), kCharZero);
    for (Fe x = 1; x < field.q(); ++x)
        chi.table_[static_cast<size_t>(x)] = static_cast<int>(field.log(x) % order);
    return chi;
}

MultCharacter MultCharacter::power(int j) const {
    j %= order_;
    if (j < 0) j += order_;
    MultCharacter chi;
    chi.order_ = order_;
    chi.table_.resize(table_.size());
    for (size_t i = 0; i < table_.size(); ++i) {
        chi.table_[i] =
            table_[i] == kCharZero ? kCharZero : static_cast<int>((static_cast<long>(table_[i]) * j) % order_);
    }
    return chi;
}

}  // namespace cycstat
