#include "cycstat/rvmodel.hpp"

#include <stdexcept>
#include <vector>

namespace cycstat {

RVModel RVModel::make(long q, int p) {
    if (p < 2) throw std::invalid_argument("cover order must be >= 2");
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    RVModel m;
    m.q = q;
    m.p = p;
    m.prob_zero = make_ratio(Int(p - 1), Int(q + p - 1));
    m.prob_root = make_ratio(Int(q), Int(p) * (q + p - 1));
    return m;
}

Histogram sum_distribution(const RVModel& model, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    Histogram h;
    h.add(Cyclo::integer(model.p, 0), Rat(1));
    for (int step = 0; step < n; ++step) {
        Histogram next;
        for (const auto& [s, m] : h.bins) {
            next.add(s, m * model.prob_zero);
            for (int t = 0; t < model.p; ++t)
                next.add(s + Cyclo::root(model.p, t), m * model.prob_root);
        }
        h = std::move(next);
    }
    return h;
}

MomentValue model_mixed_moment(const RVModel& model, int n, int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("moment orders must be nonnegative");
    // per-variable moments
    auto single = [&](int b, int c) -> Rat {
        if (b == 0 && c == 0) return Rat(1);
        if ((b - c) % model.p != 0) return Rat(0);
        return Rat(model.p) * model.prob_root;
    };
    // E[S_m^a conj(S_m)^c] by S_m = S_{m-1} + X_m and independence
    std::vector<std::vector<Rat>> cur(static_cast<size_t>(j) + 1,
                                      std::vector<Rat>(static_cast<size_t>(k) + 1, Rat(0)));
    cur[0][0] = Rat(1);  // empty sum
    std::vector<std::vector<Int>> binj(static_cast<size_t>(j) + 1), bink(static_cast<size_t>(k) + 1);
    for (int a = 0; a <= j; ++a)
        for (int b = 0; b <= a; ++b)
            binj[static_cast<size_t>(a)].push_back(
                binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b)));
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= a; ++b)
            bink[static_cast<size_t>(a)].push_back(
                binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b)));
    for (int m = 1; m <= n; ++m) {
        std::vector<std::vector<Rat>> next(static_cast<size_t>(j) + 1,
                                           std::vector<Rat>(static_cast<size_t>(k) + 1, Rat(0)));
        for (int a = 0; a <= j; ++a) {
            for (int c = 0; c <= k; ++c) {
                Rat acc(0);
                for (int b = 0; b <= a; ++b) {
                    for (int d = 0; d <= c; ++d) {
                        Rat e = single(a - b, c - d);
                        if (e == 0) continue;
                        acc += Rat(binj[static_cast<size_t>(a)][static_cast<size_t>(b)] *
                                   bink[static_cast<size_t>(c)][static_cast<size_t>(d)]) *
                               cur[static_cast<size_t>(b)][static_cast<size_t>(d)] * e;
                    }
                }
                next[static_cast<size_t>(a)][static_cast<size_t>(c)] = acc;
            }
        }
        cur = std::move(next);
    }
    MomentValue mv;
    mv.n = n;
    mv.half_power = ((j + k) % 2) != 0;
    Rat v = cur[static_cast<size_t>(j)][static_cast<size_t>(k)];
    if (n > 0)
        v /= Rat(int_pow(Int(n), static_cast<unsigned long>((j + k) / 2)));
    else if (j + k > 0)
        v = 0;
    mv.value = CycloQ::integer(model.p, v);
    return mv;
}

Int gaussian_mixed_moment(int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("moment orders must be nonnegative");
    if (j != k) return 0;
    return factorial(static_cast<unsigned long>(k));
}

}  // namespace cycstat
