#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cycstat {

using Int = mpz_class;
using Rat = mpq_class;

// High-precision float used wherever a value is irrational (Euler products,
// main terms containing them). 512 bits keeps every desk-scale comparison
// far below any tolerance in play.
inline constexpr mp_bitcnt_t kRealBits = 512;
using Real = mpf_class;

inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_ratio(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_ratio: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("rat_pow: 0 to negative power");
        return Rat(1) / rat_pow(base, -e);
    }
    Rat r(int_pow(base.get_num(), static_cast<unsigned long>(e)),
          int_pow(base.get_den(), static_cast<unsigned long>(e)));
    // num/den coprime implies their powers are too; no canonicalize needed
    return r;
}

inline Real to_real(const Rat& x) { return Real(x, kRealBits); }

inline Real real_pow(const Real& base, unsigned long e) {
    Real r(0, kRealBits);
    mpf_pow_ui(r.get_mpf_t(), base.get_mpf_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Decimal string with enough digits to make reports reproducible.
inline std::string real_str(const Real& x, int digits = 30) {
    mp_exp_t exp10 = 0;
    std::string mant = x.get_str(exp10, 10, digits);
    if (mant.empty()) mant = "0";
    bool neg = mant[0] == '-';
    std::string m = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-0." : "0.") + m + "e" + std::to_string(exp10);
    return out;
}

}  // namespace cycstat
