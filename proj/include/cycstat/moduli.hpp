#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cycstat/counting.hpp"
#include "cycstat/gf.hpp"
#include "cycstat/hist.hpp"
#include "cycstat/parallel.hpp"
#include "cycstat/poly.hpp"
#include "cycstat/rvmodel.hpp"
#include "cycstat/trace.hpp"

namespace cycstat {

// Irreducible piece of the moduli space of cyclic p-fold covers, indexed by
// the degree tuple of the square-free coprime factors. For p = 3 the pairs
// (d1, d2) and (d2, d1) name the same component; the canonical form keeps
// d1 >= d2. For p > 3 tuples are kept ordered as given.
struct ComponentIndex {
    int p = 0;
    std::vector<int> degrees;
    int ram_count = 0;  // number of branch points R
    int genus = 0;

    static ComponentIndex make(int p, std::vector<int> degrees);
};

// (R, g): R = sum d_i, plus one when sum i*d_i is not 0 mod p;
// g = (p-1)(R-2)/2.
std::pair<int, int> genus_of(const std::vector<int>& degrees, int p);

// All canonical components of genus g. For p = 2 these are the two degree
// classes 2g+1 and 2g+2 of the (irreducible) hyperelliptic moduli space.
std::vector<ComponentIndex> components_for_genus(int g, int p);

// Signature (r, s) = ((2 d1 + d2 - 3)/3, (d1 + 2 d2 - 3)/3); trigonal only.
std::pair<int, int> signature_of(const ComponentIndex& c);
std::vector<int> degrees_of_signature(int r, int s);

// The degree tuples of the closed family: the target and every variant with
// one degree dropped by one.
std::vector<std::vector<int>> closed_family_variants(const std::vector<int>& degrees);

// |F_(d_1,...,d_r)| by enumeration.
Int family_count(const Field& f, const std::vector<int>& degrees, Budget& budget);

// |F-hat_[d]| = (q-1) * sum of the variant counts.
Int closed_family_count(const Field& f, const std::vector<int>& degrees, Budget& budget);

// |H^(d)|' = |F-hat_[d]| / (q (q^2 - 1)).
Rat weighted_component_size(const Field& f, const ComponentIndex& c, Budget& budget);

// Empirical trace statistics of a family against the i.i.d. model.
struct EmpiricalReport {
    int p = 0;
    std::vector<int> degrees;  // component degrees; {2g+1, 2g+2} classes for p = 2
    int genus = 0;
    int n_vars = 0;            // q for affine families, q+1 for projective
    Histogram hist;            // raw masses; total = family size
    Int family_size;
    Rat weighted_size;         // family size / (q(q^2-1)); 0 for affine families
    Histogram model;           // normalized model prediction
    Rat tv;                    // total variation distance, exact
    Rat per_bin_delta;         // max |emp/model - 1| over bins with model mass >= threshold
    Rat bin_threshold;
    bool genus_advisory = false;  // genus below the validity threshold of the weighting argument
};

// Histogram of S-hat over the full twisted closed family F-hat_[d], obtained
// from monic enumeration with the q-1 scalings folded in through
// S-hat(alpha F) = chi(alpha) S-hat(F): each monic trace contributes mass
// (q-1)/p at each of its p rotations. Model: sum of q+1 variables.
EmpiricalReport empirical_trace_distribution(const Field& f, const ComponentIndex& c,
                                             const MultCharacter& chi, int workers,
                                             Budget& budget);

// Histogram of the affine sum S over the monic family F_(d), no twisting.
// Model: sum of q variables.
EmpiricalReport affine_trace_distribution(const Field& f, const std::vector<int>& degrees,
                                          const MultCharacter& chi, int workers, Budget& budget);

// Histogram of S-hat_2 over both hyperelliptic degree classes 2g+1, 2g+2.
EmpiricalReport hyperelliptic_trace_distribution(const Field& f, int g, int workers,
                                                 Budget& budget);

// Mixed moment of the stored histogram
// normalized by (q+1)^((j+k)/2) (the trace sign (-1)^(j+k) cancels against
// writing the moment in terms of S-hat). Exactly 0 whenever j != k mod p.
MomentValue empirical_mixed_moment(const EmpiricalReport& rep, int j, int k);

// Model threshold below which empirical bins are too thin to compare.
Rat per_bin_threshold(long q, int p);

}  // namespace cycstat
