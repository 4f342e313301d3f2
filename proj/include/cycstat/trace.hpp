#pragma once

#include <complex>
#include <vector>

#include "cycstat/cyclo.hpp"
#include "cycstat/gf.hpp"
#include "cycstat/poly.hpp"
#include "cycstat/rational.hpp"

namespace cycstat {

class IntegrityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// S(F) = sum over x in F_q of chi(prod F_i(x)^i), exact in Z[zeta_p].
// chi must have order equal to the tuple's cover order.
Cyclo affine_char_sum(const Field& f, const FactorTuple& t, const MultCharacter& chi);

// Value of scale*F at the point at infinity under the projective convention:
// the leading coefficient of the expanded product ([scale] times 1 for monic
// tuples) when the degree tuple equals the target, and 0 when it is one of
// the degree-dropped variants. Anything else is outside the closed family.
Fe infinity_value(const Field& f, const FactorTuple& t, Fe scale,
                  const std::vector<int>& target_degrees);

// S-hat(scale*F) over P^1(F_q): chi(scale) * (S(F) + chi-value at infinity).
Cyclo projective_char_sum(const Field& f, const FactorTuple& t, Fe scale,
                          const MultCharacter& chi, const std::vector<int>& target_degrees);

// Trace of Frobenius on the chi-isotypic part of H^1: minus the projective
// character sum.
Cyclo frobenius_trace(const Field& f, const FactorTuple& t, Fe scale, const MultCharacter& chi,
                      const std::vector<int>& target_degrees);

// Extension field F_{q^n} together with the embedding of the base field,
// built once per (base, n) and shared read-only.
struct ExtField {
    Field field;
    std::vector<Fe> embed;  // base element -> extension element
};

const ExtField& extension_of(const Field& base, int n);

// Number of points of the projective curve Y^p = scale*F(X) over F_{q^n},
// counted through fiber sizes: a point x contributes 1 when F(x) = 0, and
// otherwise p or 0 according to whether F(x) is a p-th power (the map y->y^p
// is a bijection when p does not divide q^n - 1, in which case every x
// contributes exactly 1). The point at infinity follows infinity_value.
long long point_count_extension(const Field& base, const FactorTuple& t, Fe scale, int p, int n,
                                const std::vector<int>& target_degrees);

// Numerator data of the zeta function recovered from point counts.
struct ZetaData {
    int genus = 0;
    long q = 0;
    std::vector<long long> point_counts;         // N_1..N_{2g}
    std::vector<Int> p_coeffs;                   // P_C coefficients, a_0 = 1
    std::vector<std::complex<double>> roots;     // reciprocal roots alpha_j
    double max_weil_deviation = 0.0;             // max | |alpha_j| - sqrt(q) |
};

// Recovers P_C(T) = prod (1 - alpha_j T) from N_1..N_{2g} via the power sums
// s_n = q^n + 1 - N_n and Newton's identities, in exact integer arithmetic.
// Throws IntegrityError if the functional equation a_{2g-i} = q^(g-i) a_i
// fails or the reciprocal roots stray from |alpha| = sqrt(q) beyond 1e-9.
ZetaData zeta_from_counts(const std::vector<long long>& counts, long q, int g);

// Reciprocal-root finder used by zeta_from_counts (Durand-Kerner), exposed
// for tests. Coefficients lowest degree first.
std::vector<std::complex<double>> complex_roots(const std::vector<double>& coeffs);

}  // namespace cycstat
