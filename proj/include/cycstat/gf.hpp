#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cycstat {

// Field element: index in [0, q). The index is the base-p encoding of the
// coefficient vector over the prime field, so 0 and 1 are the additive and
// multiplicative identities in every field.
using Fe = int;

class FieldError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// F_q for q = characteristic^ext_degree, with exp/log tables built once at
// construction so that multiplication, inversion and character evaluation
// are O(1). The generator is the smallest element (by index) generating the
// unit group; for ext_degree > 1 the modulus is the first irreducible in the
// enumeration order of monic polynomials (smallest when coefficient vectors
// are compared from the top degree down).
class Field {
  public:
    static Field make(long characteristic, int ext_degree = 1);

    long q() const { return q_; }
    long characteristic() const { return char_; }
    int ext_degree() const { return deg_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }
    Fe generator() const { return gen_; }

    Fe add(Fe a, Fe b) const {
        if (deg_ == 1) {
            long s = static_cast<long>(a) + b;
            return static_cast<Fe>(s >= char_ ? s - char_ : s);
        }
        if (char_ == 2) return a ^ b;
        return add_digits(a, b);
    }

    Fe neg(Fe a) const {
        if (deg_ == 1) return a == 0 ? 0 : static_cast<Fe>(char_ - a);
        if (char_ == 2) return a;
        return neg_digits(a);
    }

    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const {
        if (a == 0 || b == 0) return 0;
        long e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }

    Fe inv(Fe a) const {
        if (a == 0) throw FieldError("inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    Fe pow(Fe a, long e) const;

    // Reduces an integer into the prime subfield.
    Fe from_int(long v) const {
        long r = v % char_;
        if (r < 0) r += char_;
        return static_cast<Fe>(r);
    }

    // Discrete log base the canonical generator; a must be nonzero.
    long log(Fe a) const {
        if (a == 0) throw FieldError("log of zero");
        return log_[a];
    }
    Fe gen_pow(long k) const {
        long m = k % (q_ - 1);
        if (m < 0) m += q_ - 1;
        return exp_[m];
    }

  private:
    long char_ = 0;
    int deg_ = 0;
    long q_ = 0;
    std::vector<int> modulus_;  // monic, coefficients over the prime field; empty for deg 1
    Fe gen_ = 0;
    std::vector<Fe> exp_;   // exp_[k] = generator^k, k in [0, q-1)
    std::vector<long> log_;  // log_[x]; log_[0] unused

    Fe add_digits(Fe a, Fe b) const;
    Fe neg_digits(Fe a) const;
    Fe mul_poly(Fe a, Fe b) const;  // modulus arithmetic, used before tables exist
    Fe pow_poly(Fe a, long e) const;

    friend struct FieldBuilder;
};

// Order-n multiplicative character, stored as exponents of zeta_n.
// chi(0) is the sentinel value kCharZero and contributes 0 to every sum.
class MultCharacter {
  public:
    static constexpr int kCharZero = -1;

    static MultCharacter make(const Field& field, int order);

    int order() const { return order_; }

    // Exponent of zeta_n, or kCharZero for x = 0.
    int operator()(Fe x) const { return table_[static_cast<size_t>(x)]; }

    // chi^j, j mod order. j = order-1 gives the conjugate character.
    MultCharacter power(int j) const;
    MultCharacter conjugate() const { return power(order_ - 1); }

  private:
    int order_ = 1;
    std::vector<int> table_;
};

}  // namespace cycstat
