#pragma once

#include "cycstat/hist.hpp"
#include "cycstat/rational.hpp"

namespace cycstat {

// The i.i.d. model: each variable takes the value 0 with probability
// (p-1)/(q+p-1) and each p-th root of unity with probability q/(p(q+p-1)).
struct RVModel {
    long q = 0;
    int p = 0;
    Rat prob_zero;
    Rat prob_root;

    static RVModel make(long q, int p);
};

// Exact distribution of X_1 + ... + X_n on Z[zeta_p], by n-fold convolution
// of the single-variable law.
Histogram sum_distribution(const RVModel& model, int n);

// E[(S_n/sqrt(n))^j (conj(S_n)/sqrt(n))^k], exact. Computed by a binomial
// recursion on per-variable moments, which are rational:
// E[X^b conj(X)^c] = p * prob_root when b = c mod p (and (b,c) != (0,0)),
// 0 otherwise. Cross-checked elsewhere against the convolution histogram.
MomentValue model_mixed_moment(const RVModel& model, int n, int j, int k);

// Mixed moments of the standard complex Gaussian: k! when j = k, else 0.
Int gaussian_mixed_moment(int j, int k);

}  // namespace cycstat
