#pragma once

#include "biagram.hpp"

#include <map>
#include <numeric>
#include <random>

namespace zamolod {

enum class MutationColor : unsigned char { gamma, delta, tie };

inline const char* color_name(MutationColor c) {
    switch (c) {
        case MutationColor::gamma: return "gamma";
        case MutationColor::delta: return "delta";
        case MutationColor::tie: return "tie";
    }
    return "?";
}

struct TropicalState {
    int t = 0;
    std::vector<std::optional<Rat>> values;
};

struct TropStepResult {
    TropicalState state;
    std::vector<std::optional<MutationColor>> colors;
};

struct TropTrajectory {
    std::vector<TropicalState> states;                             // t = 0..steps
    std::vector<std::vector<std::optional<MutationColor>>> colors;  // colors[t] for the values created at t >= 2
};

inline bool trop_populated(Color c, int t) { return ((t % 2) + 2) % 2 == parity_of(c); }

inline std::pair<TropicalState, TropicalState> trop_initial(const DynkinBiagram& bg, const std::vector<Rat>& lambda) {
    if (lambda.size() != bg.n) throw Error("labeling has the wrong length");
    TropicalState s0{0, std::vector<std::optional<Rat>>(bg.n)}, s1{1, std::vector<std::optional<Rat>>(bg.n)};
    for (std::size_t k = 0; k < bg.n; ++k) (bg.eps[k] == Color::white ? s0 : s1).values[k] = lambda[k];
    return {s0, s1};
}

inline Rat trop_column(const IMat& m, const TropicalState& cur, std::size_t k) {
    Rat s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i][k]) s += Rat(static_cast<long>(m[i][k])) * *cur.values[i];
    return s;
}

inline TropStepResult trop_step(const DynkinBiagram& bg, const TropicalState& prev, const TropicalState& cur) {
    if (cur.t != prev.t + 1) throw Error("states are not consecutive");
    TropStepResult r{{cur.t + 1, std::vector<std::optional<Rat>>(bg.n)}, std::vector<std::optional<MutationColor>>(bg.n)};
    for (std::size_t k = 0; k < bg.n; ++k) {
        if (!trop_populated(bg.eps[k], r.state.t)) continue;
        Rat g = trop_column(bg.gamma, cur, k), d = trop_column(bg.delta, cur, k);
        r.colors[k] = g > d ? MutationColor::gamma : g < d ? MutationColor::delta : MutationColor::tie;
        r.state.values[k] = (g > d ? g : d) - *prev.values[k];
    }
    return r;
}

inline TropTrajectory trop_evolve(const DynkinBiagram& bg, const std::vector<Rat>& lambda, int steps) {
    auto [s0, s1] = trop_initial(bg, lambda);
    TropTrajectory tr;
    tr.states.push_back(s0);
    tr.colors.emplace_back(bg.n);
    if (steps >= 1) {
        tr.states.push_back(s1);
        tr.colors.emplace_back(bg.n);
    }
    for (int t = 2; t <= steps; ++t) {
        auto r = trop_step(bg, tr.states[t - 2], tr.states[t - 1]);
        tr.states.push_back(std::move(r.state));
        tr.colors.push_back(std::move(r.colors));
    }
    return tr;
}

// smallest N <= max_N with t(2N) = t(0) and t(2N+1) = t(1)
inline std::optional<int> trop_period(const DynkinBiagram& bg, const std::vector<Rat>& lambda, int max_N) {
    auto [s0, s1] = trop_initial(bg, lambda);
    TropicalState a = s0, b = s1;
    for (int N = 1; N <= max_N; ++N) {
        auto c = trop_step(bg, a, b).state;
        auto d = trop_step(bg, b, c).state;
        if (c.values == s0.values && d.values == s1.values) return N;
        a = std::move(c);
        b = std::move(d);
    }
    return std::nullopt;
}

inline std::vector<Rat> basis_labeling(std::size_t n, std::size_t i) {
    std::vector<Rat> l(n, Rat(0));
    l[i] = 1;
    return l;
}

struct DeltaOracle {
    int N = 0;                                      // common period of the delta_i trajectories
    std::vector<std::vector<std::vector<Rat>>> t;   // t[i][j][time] for time = 0..2N+1, 0 when unpopulated
    std::vector<std::vector<Rat>> a;                // a[i][j] = sum_k t_j^{delta_i}(2k + eta_j)
    std::vector<Rat> nu;                            // nu[j] = sum_i a[i][j]
};

// runs the tropical T-system from each basis labeling delta_i
inline DeltaOracle delta_labelings_oracle(const DynkinBiagram& bg, std::optional<int> max_N = std::nullopt) {
    std::size_t n = bg.n;
    int cap = max_N ? *max_N : [&] {
        auto [hg, hd] = coxeter_numbers(bg);
        return 2 * (hg + hd);
    }();
    DeltaOracle o;
    long long N = 1;
    for (std::size_t i = 0; i < n; ++i) {
        auto p = trop_period(bg, basis_labeling(n, i), cap);
        if (!p) throw Error("delta labeling is not periodic within the window");
        N = std::lcm(N, static_cast<long long>(*p));
    }
    o.N = static_cast<int>(N);
    o.t.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(2 * N + 2, Rat(0))));
    o.a.assign(n, std::vector<Rat>(n, Rat(0)));
    o.nu.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        auto tr = trop_evolve(bg, basis_labeling(n, i), static_cast<int>(2 * N + 1));
        for (std::size_t j = 0; j < n; ++j) {
            for (int s = 0; s <= 2 * N + 1; ++s)
                if (tr.states[s].values[j]) o.t[i][j][s] = *tr.states[s].values[j];
            int eta = parity_of(bg.eps[j]);
            for (int k = 0; k < N; ++k) o.a[i][j] += o.t[i][j][2 * k + eta];
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) o.nu[j] += o.a[i][j];
    return o;
}

struct TieEncountered {
    int vertex;
    int t;
};

struct MutationCounts {
    long long n_gamma = 0, n_delta = 0, n_tie = 0;
    std::vector<TieEncountered> ties;
};

// counts over the 2N steps producing t = 2..2N+1, with N = h_Gamma + h_Delta by default
inline MutationCounts count_mutations(const DynkinBiagram& bg, const std::vector<Rat>& lambda,
                                     std::optional<int> period = std::nullopt) {
    int N = period ? *period : [&] {
        auto [hg, hd] = coxeter_numbers(bg);
        return hg + hd;
    }();
    auto tr = trop_evolve(bg, lambda, 2 * N + 1);
    MutationCounts c;
    for (int t = 2; t <= 2 * N + 1; ++t)
        for (std::size_t k = 0; k < bg.n; ++k) {
            auto& col = tr.colors[t][k];
            if (!col) continue;
            if (*col == MutationColor::gamma)
                ++c.n_gamma;
            else if (*col == MutationColor::delta)
                ++c.n_delta;
            else {
                ++c.n_tie;
                c.ties.push_back({static_cast<int>(k), t});
            }
        }
    return c;
}

// random rationals p/q with |p| <= 60, 1 <= q <= 12
inline std::vector<Rat> random_labeling(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-60, 60), den(1, 12);
    std::vector<Rat> l(n);
    for (auto& x : l) {
        x = Rat(num(rng), den(rng));
        x.canonicalize();
    }
    return l;
}

struct ConjectureTrial {
    std::vector<Rat> lambda;
    MutationCounts counts;
    long long expected_gamma = 0, expected_delta = 0;
    bool generic() const { return counts.n_tie == 0; }
    bool matches() const { return counts.n_gamma == expected_gamma && counts.n_delta == expected_delta; }
};

// mutation counts against (h_Gamma * r, h_Delta * r) for seeded random labelings; reports, never asserts
inline std::vector<ConjectureTrial> conjecture_trials(const DynkinBiagram& bg, int trials, std::uint64_t seed) {
    auto [hg, hd] = coxeter_numbers(bg);
    long long r = static_cast<long long>(bg.n);
    std::mt19937_64 rng(seed);
    std::vector<ConjectureTrial> out;
    for (int k = 0; k < trials; ++k) {
        ConjectureTrial tr;
        tr.lambda = random_labeling(bg.n, rng);
        tr.counts = count_mutations(bg, tr.lambda, hg + hd);
        tr.expected_gamma = hg * r;
        tr.expected_delta = hd * r;
        out.push_back(std::move(tr));
    }
    return out;
}

struct DeltaBoundReport {
    long long n_delta = 0;
    long long bound = 0;
    long long n_tie = 0;
    bool within() const { return n_delta <= bound; }
};

// Hook for affine Gamma components: counts Delta-mutations over the given number of steps against h_Delta * r.
// Gamma is taken as supplied (no affine constructors); Delta must decompose into Dynkin components.
inline DeltaBoundReport delta_mutation_bound(const IMat& gamma, const IMat& delta, const std::vector<Color>& eps,
                                             const std::vector<Rat>& lambda, int steps) {
    DynkinBiagram bg{gamma.size(), gamma, delta, eps};
    int hd = shared_coxeter_number(delta, "delta");
    auto tr = trop_evolve(bg, lambda, steps);
    DeltaBoundReport rep;
    rep.bound = static_cast<long long>(hd) * static_cast<long long>(gamma.size());
    for (int t = 2; t <= steps; ++t)
        for (auto& c : tr.colors[t]) {
            if (!c) continue;
            if (*c == MutationColor::delta) ++rep.n_delta;
            if (*c == MutationColor::tie) ++rep.n_tie;
        }
    return rep;
}

}  // namespace zamolod
