#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cycstat/rational.hpp"

namespace cycstat {

// Element of Z[zeta_p] (or Q[zeta_p] with rational coefficients) in the
// reduced basis 1, zeta, ..., zeta^(p-2), using 1 + zeta + ... + zeta^(p-1) = 0.
// For p = 2 this degenerates to the integers, for p = 3 to the Eisenstein
// integers a + b*omega with omega^2 = -1 - omega.
template <class C>
class Cyclotomic {
  public:
    Cyclotomic() : p_(2), c_(1, C(0)) {}
    explicit Cyclotomic(int p) : p_(p), c_(static_cast<size_t>(p - 1), C(0)) {
        if (p < 2) throw std::invalid_argument("Cyclotomic: p must be >= 2");
    }

    static Cyclotomic integer(int p, const C& n) {
        Cyclotomic z(p);
        z.c_[0] = n;
        return z;
    }

    // zeta_p^e, e taken mod p.
    static Cyclotomic root(int p, long e) {
        Cyclotomic z(p);
        e %= p;
        if (e < 0) e += p;
        if (e == p - 1) {
            for (auto& x : z.c_) x = C(-1);
        } else {
            z.c_[static_cast<size_t>(e)] = C(1);
        }
        return z;
    }

    int prime() const { return p_; }
    const std::vector<C>& coeffs() const { return c_; }
    C& operator[](size_t i) { return c_[i]; }
    const C& operator[](size_t i) const { return c_[i]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    // True when the element lies in the prime field Q (all higher coords 0).
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    C rational_part() const {
        if (!is_rational()) throw std::domain_error("Cyclotomic: value is not rational");
        return c_[0];
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    Cyclotomic operator-() const {
        Cyclotomic r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        const int p = a.p_;
        // accumulate on the full power basis zeta^0..zeta^(p-1), then reduce
        std::vector<C> acc(static_cast<size_t>(p), C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                acc[(i + j) % static_cast<size_t>(p)] += a.c_[i] * b.c_[j];
            }
        }
        return reduce(p, acc);
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic& scale(const C& k) {
        for (auto& x : c_) x *= k;
        return *this;
    }

    Cyclotomic conj() const {
        // zeta^i -> zeta^(p-i)
        std::vector<C> acc(static_cast<size_t>(p_), C(0));
        for (size_t i = 0; i < c_.size(); ++i)
            acc[(static_cast<size_t>(p_) - i) % static_cast<size_t>(p_)] = c_[i];
        return reduce(p_, acc);
    }

    // Multiply by zeta^e.
    Cyclotomic rotated(long e) const {
        e %= p_;
        if (e < 0) e += p_;
        std::vector<C> acc(static_cast<size_t>(p_), C(0));
        for (size_t i = 0; i < c_.size(); ++i)
            acc[(i + static_cast<size_t>(e)) % static_cast<size_t>(p_)] = c_[i];
        return reduce(p_, acc);
    }

    Cyclotomic pow(unsigned long e) const {
        Cyclotomic r = integer(p_, C(1));
        Cyclotomic b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::complex<double> to_complex() const {
        std::complex<double> z(0.0, 0.0);
        for (size_t i = 0; i < c_.size(); ++i) {
            double arg = 2.0 * 3.14159265358979323846 * static_cast<double>(i) / p_;
            z += coeff_double(c_[i]) * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        return z;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

  private:
    int p_;
    std::vector<C> c_;

    void check(const Cyclotomic& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Cyclotomic: mixed p");
    }

    static Cyclotomic reduce(int p, const std::vector<C>& acc) {
        Cyclotomic r(p);
        const C& top = acc[static_cast<size_t>(p - 1)];
        for (size_t i = 0; i + 1 < acc.size(); ++i) r.c_[i] = acc[i] - top;
        return r;
    }

    static double coeff_double(long long v) { return static_cast<double>(v); }
    static double coeff_double(const Int& v) { return v.get_d(); }
    static double coeff_double(const Rat& v) { return v.get_d(); }
};

using Cyclo = Cyclotomic<long long>;
using CycloBig = Cyclotomic<Int>;
using CycloQ = Cyclotomic<Rat>;

inline CycloBig to_big(const Cyclo& z) {
    CycloBig r(z.prime());
    for (size_t i = 0; i + 1 < static_cast<size_t>(z.prime()); ++i) r[i] = Int(static_cast<long>(z[i]));
    return r;
}

inline CycloQ to_rational(const CycloBig& z) {
    CycloQ r(z.prime());
    for (size_t i = 0; i + 1 < static_cast<size_t>(z.prime()); ++i) r[i] = Rat(z[i]);
    return r;
}

}  // namespace cycstat
