#pragma once

#include <map>
#include <string>
#include <vector>

#include "cycstat/counting.hpp"
#include "cycstat/moduli.hpp"
#include "cycstat/report.hpp"

namespace cycstat {

struct ExperimentConfig {
    std::string mode;
    long characteristic = 7;
    int ext_degree = 1;
    int p = 3;
    std::vector<int> degrees;
    int genus = -1;
    std::vector<std::pair<int, int>> jk;
    int trunc = 12;
    int workers = 1;
    long long budget = 100000000;
    std::string out;
    std::string format = "json";
    bool affine = false;
    int n = -1;       // rv-model variable count; default q+1
    int samples = 20; // zeta-check curves per family

    long q() const;
    void validate() const;
    std::vector<std::pair<std::string, std::string>> echo() const;
};

// Deterministic: identical config (including any worker count) gives a
// byte-identical report. Throws std::invalid_argument on bad config; budget
// overruns return a report flagged incomplete.
Report run(const ExperimentConfig& cfg);

// ---- brute-force scans shared by verify modes and the acceptance suite ----

Int brute_squarefree_count(const Field& f, int d);
Int brute_squarefree_nonmonic_count(const Field& f, int d);

// Counts of monic degree-d polynomials by their value vector at the given
// points, for exhaustive prescribed-value checks at small ell.
std::map<std::vector<Fe>, long long> prescribed_value_counts(const Field& f, int d,
                                                             const std::vector<Fe>& points);

// Same, restricted to square-free polynomials.
std::map<std::vector<Fe>, long long> prescribed_value_counts_squarefree(const Field& f, int d,
                                                                        const std::vector<Fe>& points);

// Counts of monic degree-d polynomials coprime to U with the given values.
std::map<std::vector<Fe>, long long> prescribed_value_counts_coprime(const Field& f, int d,
                                                                     const Poly& u,
                                                                     const std::vector<Fe>& points);

// One pass over F_(degrees): family size, counts by value at point x0, and
// the count of members whose character pattern at all q points matches the
// given one (entries are zeta-exponents, kCharZero for a prescribed zero).
struct FamilyScan {
    Int count;
    std::vector<long long> value_counts;  // by value at x0
    long long pattern_count = 0;
};

FamilyScan scan_family(const Field& f, const std::vector<int>& degrees, const MultCharacter& chi,
                       Fe x0, const std::vector<int>& pattern, int workers, Budget& budget);

// Canonical character pattern with m zeros at the first m points and
// exponent (i mod p) elsewhere.
std::vector<int> canonical_pattern(long q, int p, int m);

}  // namespace cycstat
