#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cycstat/gf.hpp"
#include "cycstat/poly.hpp"
#include "cycstat/rational.hpp"

namespace cycstat {

// zeta_q(s) = (1 - q^(1-s))^(-1) for integer s >= 2; the pole at s = 1 is
// rejected.
Rat zeta_q_at(long q, int s);

// |F_d|: monic square-free of degree d. q^d(1 - 1/q) for d >= 2, q^d below.
Int exact_count_squarefree(long q, int d);

// Square-free of degree d with arbitrary leading coefficient:
// q^(d+1)(1-1/q)^2 for d >= 2, q^(d+1)(1-1/q) for d in {0,1}.
Int exact_count_squarefree_nonmonic(long q, int d);

// Monic of degree d through ell prescribed (point, value) pairs: q^(d-ell).
Int exact_count_monic_prescribed(long q, int d, int ell);

// Monic of degree d, coprime to U, taking ell prescribed nonzero values at
// points avoiding the roots of U: q^(d-ell) prod_{P|U} (1 - q^(-deg P)).
// Points and values are optional; the count does not depend on them, but
// they are validated when given. Exact for d >= ell + deg rad(U).
Int exact_count_coprime_prescribed(const Field& f, int d, const Poly& u,
                                   std::span<const Fe> points = {},
                                   std::span<const Fe> values = {});

// Leading asymptotic expression plus the exponents inside its O(.) term.
// Values that contain an Euler-product constant are irrational; those carry
// exact_rational = false and only the high-precision value is meaningful.
struct MainTermPrediction {
    Real value{0, kRealBits};
    Rat rational_value;
    bool exact_rational = false;
    std::vector<std::pair<std::string, Rat>> error_exponents;
    std::string statement;
};

// Square-free monic with m prescribed zeros and ell prescribed nonzero
// values: (1-1/q)^m q^(d-(m+ell)) / (zeta_q(2) (1-q^-2)^(m+ell)).
MainTermPrediction main_term_squarefree_prescribed(long q, int d, int ell, int m);

// Square-free monic of degree d with exactly k roots in F_q:
// binom(q,k) q^(d-k) / (zeta_q(2) (1+1/q)^q).
MainTermPrediction main_term_squarefree_k_roots(long q, int d, int k);

// Square-free monic coprime to U with ell prescribed nonzero values:
// q^(d-ell) / (zeta_q(2)(1-q^-2)^ell) * prod_{P|U} (1 + q^(-deg P))^(-1).
MainTermPrediction main_term_squarefree_coprime(const Field& f, int d, const Poly& u, int ell);

// Truncated Euler product over monic irreducibles with a rigorous tail
// bound. The per-degree factor bases are exact rationals; the value is the
// product of factor^I_n accumulated at kRealBits. The true infinite product
// lies in [value * tail_lower_factor, value].
struct EulerProduct {
    long q = 0;
    int trunc_degree = 0;
    std::string name;
    std::vector<Rat> degree_factor;     // index n-1: the degree-n factor base
    std::vector<Int> degree_count;      // I_n
    Real value{0, kRealBits};
    Rat tail_lower_factor;              // 1 - bound on sum of removed (1-factor) masses
};

// K = prod_P (1 - 1/(|P|+1)^2).
EulerProduct euler_constant_K(long q, int trunc_degree);

// L_{r-1} = prod_{j=1}^{r-1} prod_P (1 - j/((|P|+1)(|P|+j))).
EulerProduct euler_constant_L(long q, int r, int trunc_degree);

// Family size and prescribed-value main terms for tuples of r = p-1 square
// free coprime factors. With m zeros and ell nonzero values prescribed:
//   C * q^(sum d) / zeta_q(2)^r * (r/(q+r))^m * (q/((q+r)(q-1)))^ell,
// C = K for r = 2 and L_{r-1} in general.
MainTermPrediction main_term_component_prescribed(long q, const std::vector<int>& degrees, int ell,
                                                  int m, const EulerProduct& constant);

// Probability that a character pattern with m zeros occurs:
// ((p-1)/(q+p-1))^m (q/(p(q+p-1)))^(q-m). Requires q = 1 mod p.
Rat char_pattern_probability(long q, int p, int m);

// Probability that a value pattern with m zeros occurs:
// ((p-1)/(q+p-1))^m (q/((q+p-1)(q-1)))^(q-m).
Rat value_pattern_probability(long q, int p, int m);

// Character-pattern main term in probability form (ratio to family size).
MainTermPrediction main_term_char_prescribed(long q, int p, const std::vector<int>& degrees, int m);

// Number of (p-1)-tuples of nonzero residues modulo (X-t)^2 in which no two
// distinct components share the factor (X-t): q^(p-2) (q-1)^(p-1) (q+p-1).
Int residue_tuple_count(long q, int p);

// The same count by exhaustive enumeration of residue tuples.
Int brute_residue_tuple_count(const Field& f, int p, Fe t);

// Distribution of the value of F = prod F_i^i at t over those tuples,
// enumerated exhaustively over the value components (the (X-t) coordinate
// contributes only a multiplicity).
std::map<Fe, Int> residue_value_distribution(const Field& f, int p, Fe t);

Rat heuristic_prob_zero(long q, int p);     // (p-1)/(q+p-1)
Rat heuristic_prob_nonzero(long q, int p);  // q/((q-1)(q+p-1)) per nonzero value

}  // namespace cycstat
