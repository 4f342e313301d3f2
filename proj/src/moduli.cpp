#include "cycstat/moduli.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycstat {

std::pair<int, int> genus_of(const std::vector<int>& degrees, int p) {
    if (p < 2) throw std::invalid_argument("cover order must be >= 2");
    for (int d : degrees)
        if (d < 0) throw std::invalid_argument("negative degree");
    long weighted = 0;
    int total = 0;
    for (size_t i = 0; i < degrees.size(); ++i) {
        weighted += static_cast<long>(i + 1) * degrees[i];
        total += degrees[i];
    }
    int r = total + (weighted % p == 0 ? 0 : 1);
    long two_g = static_cast<long>(p - 1) * (r - 2);
    return {r, static_cast<int>(two_g / 2)};
}

ComponentIndex ComponentIndex::make(int p, std::vector<int> degrees) {
    if (static_cast<int>(degrees.size()) != p - 1)
        throw std::invalid_argument("component needs p-1 degrees");
    if (p == 3 && degrees[0] < degrees[1]) std::swap(degrees[0], degrees[1]);
    ComponentIndex c;
    c.p = p;
    auto [r, g] = genus_of(degrees, p);
    c.ram_count = r;
    c.genus = g;
    c.degrees = std::move(degrees);
    return c;
}

std::vector<ComponentIndex> components_for_genus(int g, int p) {
    if (g < 0) throw std::invalid_argument("negative genus");
    std::vector<ComponentIndex> out;
    if (p == 2) {
        out.push_back(ComponentIndex::make(2, {2 * g + 1}));
        out.push_back(ComponentIndex::make(2, {2 * g + 2}));
        return out;
    }
    if ((2 * g) % (p - 1) != 0) return out;
    const int dsum = 2 * g / (p - 1) + 2;
    // compositions of dsum into p-1 nonnegative parts with sum i*d_i = 0 mod p
    std::vector<int> d(static_cast<size_t>(p - 1), 0);
    auto emit = [&]() {
        long weighted = 0;
        for (size_t i = 0; i < d.size(); ++i) weighted += static_cast<long>(i + 1) * d[i];
        if (weighted % p != 0) return;
        if (p == 3 && d[0] < d[1]) return;  // (d1,d2) ~ (d2,d1): keep d1 >= d2
        out.push_back(ComponentIndex::make(p, d));
    };
    auto rec = [&](auto&& self, size_t slot, int left) -> void {
        if (slot + 1 == d.size()) {
            d[slot] = left;
            emit();
            return;
        }
        for (int v = left; v >= 0; --v) {
            d[slot] = v;
            self(self, slot + 1, left - v);
        }
    };
    rec(rec, 0, dsum);
    return out;
}

std::pair<int, int> signature_of(const ComponentIndex& c) {
    if (c.p != 3) throw std::invalid_argument("signature is defined for trigonal components");
    int d1 = c.degrees[0], d2 = c.degrees[1];
    if ((d1 + 2 * d2) % 3 != 0)
        throw std::invalid_argument("not a full trigonal component: d1 + 2 d2 != 0 mod 3");
    return {(2 * d1 + d2 - 3) / 3, (d1 + 2 * d2 - 3) / 3};
}

std::vector<int> degrees_of_signature(int r, int s) { return {2 * r - s + 1, 2 * s - r + 1}; }

std::vector<std::vector<int>> closed_family_variants(const std::vector<int>& degrees) {
    std::vector<std::vector<int>> out;
    out.push_back(degrees);
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] == 0) continue;
        auto v = degrees;
        --v[i];
        out.push_back(v);
    }
    return out;
}

namespace {

int chunk_count_for(const Field& f, const std::vector<int>& degrees) {
    const auto& first = squarefree_list(f, degrees.empty() ? 0 : degrees[0]);
    size_t n = first.size();
    return static_cast<int>(std::min<size_t>(n, 64));
}

long long tuple_cost(const std::vector<int>& degrees, long q) {
    // rough upper bound on tuples visited: product of square-free counts
    double c = 1.0;
    for (int d : degrees) c *= static_cast<double>(exact_count_squarefree(q, d).get_d());
    return c > 9e18 ? 9000000000000000000LL : static_cast<long long>(c) + 1;
}

}  // namespace

Int family_count(const Field& f, const std::vector<int>& degrees, Budget& budget) {
    budget.charge(tuple_cost(degrees, f.q()));
    int chunks = chunk_count_for(f, degrees);
    auto partial = run_chunks<long long>(chunks, 1, [&](int c) {
        long long n = 0;
        for_each_factor_tuple_chunk(f, degrees, chunks, c, [&](const FactorTuple&) { ++n; });
        return n;
    });
    Int total = 0;
    for (long long n : partial) total += static_cast<long>(n);
    return total;
}

Int closed_family_count(const Field& f, const std::vector<int>& degrees, Budget& budget) {
    Int total = 0;
    for (const auto& v : closed_family_variants(degrees)) total += family_count(f, v, budget);
    return total * (f.q() - 1);
}

Rat weighted_component_size(const Field& f, const ComponentIndex& c, Budget& budget) {
    const long q = f.q();
    Int n;
    if (c.p == 2) {
        // both degree classes of the genus, counted with all scalings
        int g = c.genus;
        n = exact_count_squarefree_nonmonic(q, 2 * g + 1) +
            exact_count_squarefree_nonmonic(q, 2 * g + 2);
    } else {
        n = closed_family_count(f, c.degrees, budget);
    }
    return make_ratio(n, Int(q) * (Int(q) * q - 1));
}

Rat per_bin_threshold(long q, int p) {
    return make_ratio(Int(1), 2 * int_pow(Int(p + 1), static_cast<unsigned long>(q)));
}

namespace {

// Family pieces to enumerate: a degree tuple plus whether the point at
// infinity contributes chi(leading coefficient) (full target degrees) or 0.
struct Piece {
    std::vector<int> degrees;
    bool at_infinity;
};

EmpiricalReport trace_histogram(const Field& f, int p, const MultCharacter& chi,
                                const std::vector<Piece>& pieces, bool twist, int n_vars,
                                int workers, Budget& budget) {
    const long q = f.q();
    EmpiricalReport rep;
    rep.p = p;
    rep.n_vars = n_vars;

    const long rot_mass = twist ? (q - 1) / p : 1;
    for (const auto& piece : pieces) {
        budget.charge(tuple_cost(piece.degrees, q));
        int chunks = chunk_count_for(f, piece.degrees);
        auto partial = run_chunks<Histogram>(chunks, workers, [&](int c) {
            Histogram local;
            for_each_factor_tuple_chunk(f, piece.degrees, chunks, c, [&](const FactorTuple& t) {
                Cyclo s = affine_char_sum(f, t, chi);
                if (piece.at_infinity) s += Cyclo::root(p, chi(f.one()));
                if (twist) {
                    for (int e = 0; e < p; ++e) local.add(s.rotated(e), Rat(rot_mass));
                } else {
                    local.add(s, Rat(1));
                }
            });
            return local;
        });
        for (const auto& h : partial) rep.hist.merge(h);
    }
    rep.family_size = rep.hist.total().get_num();
    return rep;
}

void attach_model(EmpiricalReport& rep, const Field& f) {
    RVModel model = RVModel::make(f.q(), rep.p);
    rep.model = sum_distribution(model, rep.n_vars);
    Histogram emp = rep.hist.normalized();
    rep.tv = tv_distance(emp, rep.model);
    rep.bin_threshold = per_bin_threshold(f.q(), rep.p);
    Rat delta(0);
    for (const auto& [s, m] : rep.model.bins) {
        if (m < rep.bin_threshold) continue;
        auto it = emp.bins.find(s);
        Rat e = it == emp.bins.end() ? Rat(0) : it->second;
        Rat dev = abs(e / m - 1);
        if (dev > delta) delta = dev;
    }
    rep.per_bin_delta = delta;
}

}  // namespace

EmpiricalReport empirical_trace_distribution(const Field& f, const ComponentIndex& c,
                                             const MultCharacter& chi, int workers,
                                             Budget& budget) {
    if (chi.order() != c.p) throw std::invalid_argument("character order must equal p");
    std::vector<Piece> pieces;
    for (const auto& v : closed_family_variants(c.degrees)) {
        long weighted = 0;
        for (size_t i = 0; i < v.size(); ++i) weighted += static_cast<long>(i + 1) * v[i];
        pieces.push_back({v, weighted % c.p == 0});
    }
    EmpiricalReport rep =
        trace_histogram(f, c.p, chi, pieces, /*twist=*/true, static_cast<int>(f.q()) + 1, workers,
                        budget);
    rep.degrees = c.degrees;
    rep.genus = c.genus;
    rep.weighted_size = make_ratio(rep.family_size, Int(f.q()) * (Int(f.q()) * f.q() - 1));
    rep.genus_advisory = (c.p == 3 && c.genus < 5) || (c.p > 3 && c.genus <= (c.p - 1) * (c.p - 1));
    attach_model(rep, f);
    return rep;
}

EmpiricalReport affine_trace_distribution(const Field& f, const std::vector<int>& degrees,
                                          const MultCharacter& chi, int workers, Budget& budget) {
    const int p = static_cast<int>(degrees.size()) + 1;
    if (chi.order() != p) throw std::invalid_argument("character order must equal p");
    std::vector<Piece> pieces{{degrees, false}};
    EmpiricalReport rep =
        trace_histogram(f, p, chi, pieces, /*twist=*/false, static_cast<int>(f.q()), workers,
                        budget);
    rep.degrees = degrees;
    rep.genus = genus_of(degrees, p).second;
    rep.weighted_size = Rat(0);
    attach_model(rep, f);
    return rep;
}

EmpiricalReport hyperelliptic_trace_distribution(const Field& f, int g, int workers,
                                                 Budget& budget) {
    if (g < 0) throw std::invalid_argument("negative genus");
    MultCharacter chi2 = MultCharacter::make(f, 2);
    std::vector<Piece> pieces{{{2 * g + 2}, true}, {{2 * g + 1}, false}};
    EmpiricalReport rep =
        trace_histogram(f, 2, chi2, pieces, /*twist=*/true, static_cast<int>(f.q()) + 1, workers,
                        budget);
    rep.degrees = {2 * g + 1, 2 * g + 2};
    rep.genus = g;
    rep.weighted_size = make_ratio(rep.family_size, Int(f.q()) * (Int(f.q()) * f.q() - 1));
    rep.genus_advisory = false;
    attach_model(rep, f);
    return rep;
}

MomentValue empirical_mixed_moment(const EmpiricalReport& rep, int j, int k) {
    return hist_mixed_moment(rep.hist, rep.n_vars, j, k);
}

}  // namespace cycstat
