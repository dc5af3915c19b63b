#pragma once

#include "biagram.hpp"
#include "laurent.hpp"

#include <map>

namespace zamolod {

struct TooLarge : Error {
    using Error::Error;
};

inline constexpr std::size_t max_birational_rank = 16;
inline constexpr std::size_t max_terms = 1000000;

// values[k] is set iff k is populated at t: white at even t, black at odd t
struct TState {
    int t = 0;
    std::vector<std::optional<LaurentPoly>> values;
};

inline bool populated(Color c, int t) { return ((t % 2) + 2) % 2 == parity_of(c); }

// the two initial layers t = 0, 1 with T_k = x_k
inline std::pair<TState, TState> initial_states(const DynkinBiagram& bg) {
    std::size_t n = bg.n;
    if (n > max_birational_rank)
        throw TooLarge("birational evolution is limited to rank " + std::to_string(max_birational_rank));
    TState s0{0, std::vector<std::optional<LaurentPoly>>(n)}, s1{1, std::vector<std::optional<LaurentPoly>>(n)};
    for (std::size_t k = 0; k < n; ++k) (bg.eps[k] == Color::white ? s0 : s1).values[k] = LaurentPoly::variable(n, k);
    return {s0, s1};
}

// prod_i T_i(t)^{M_ik}
inline LaurentPoly column_monomial(const IMat& m, const TState& cur, std::size_t k, std::size_t n) {
    LaurentPoly r = LaurentPoly::constant(n, 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i][k] == 0) continue;
        if (!cur.values[i]) throw Error("T-system neighbor is not populated at time " + std::to_string(cur.t));
        r = mul(r, pow(*cur.values[i], static_cast<unsigned>(m[i][k])));
    }
    return r;
}

inline TState step(const DynkinBiagram& bg, const TState& prev, const TState& cur) {
    if (cur.t != prev.t + 1) throw Error("states are not consecutive");
    std::size_t n = bg.n;
    TState next{cur.t + 1, std::vector<std::optional<LaurentPoly>>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        if (!populated(bg.eps[k], next.t)) continue;
        auto num = add(column_monomial(bg.gamma, cur, k, n), column_monomial(bg.delta, cur, k, n));
        if (!prev.values[k]) throw Error("T-system vertex missing at previous time");
        auto v = exact_div(num, *prev.values[k]);
        if (v.size() > max_terms) throw TooLarge("term count exceeds " + std::to_string(max_terms));
        next.values[k] = std::move(v);
    }
    return next;
}

// states at t = 0..steps
inline std::vector<TState> evolve(const DynkinBiagram& bg, int steps) {
    auto [s0, s1] = initial_states(bg);
    std::vector<TState> out{s0};
    if (steps >= 1) out.push_back(s1);
    for (int t = 2; t <= steps; ++t) out.push_back(step(bg, out[t - 2], out[t - 1]));
    return out;
}

inline bool same_values(const TState& a, const TState& b) { return a.values == b.values; }

inline int default_max_period(const DynkinBiagram& bg) {
    auto [hg, hd] = coxeter_numbers(bg);
    return hg + hd + 2;
}

// smallest N <= max_N with T(2N) = T(0) and T(2N+1) = T(1)
inline std::optional<int> detect_period(const DynkinBiagram& bg, int max_N) {
    if (max_N < 1) throw Error("max_N must be positive");
    auto [s0, s1] = initial_states(bg);
    TState a = s0, b = s1;
    for (int N = 1; N <= max_N; ++N) {
        TState c = step(bg, a, b);
        TState d = step(bg, b, c);
        if (same_values(c, s0) && same_values(d, s1)) return N;
        a = std::move(c);
        b = std::move(d);
    }
    return std::nullopt;
}

inline std::optional<int> detect_period(const DynkinBiagram& bg) { return detect_period(bg, default_max_period(bg)); }

// (deg_max, deg_min) of x_i in each populated T_j(t)
inline std::map<int, std::pair<int, int>> degree_matrix(const std::vector<TState>& traj, std::size_t i, int t) {
    if (t < 0 || static_cast<std::size_t>(t) >= traj.size()) throw IndexOutOfRange("time outside the trajectory");
    std::map<int, std::pair<int, int>> out;
    auto& s = traj[t];
    for (std::size_t j = 0; j < s.values.size(); ++j)
        if (s.values[j]) out[static_cast<int>(j)] = {deg_max(i, *s.values[j]), deg_min(i, *s.values[j])};
    return out;
}

// T_k(t+1) T_k(t-1) - (Gamma monomial + Delta monomial), zero on a correct trajectory
inline LaurentPoly exchange_residual(const DynkinBiagram& bg, const TState& prev, const TState& cur,
                                     const TState& next, std::size_t k) {
    std::size_t n = bg.n;
    auto lhs = mul(*next.values[k], *prev.values[k]);
    return sub(lhs, add(column_monomial(bg.gamma, cur, k, n), column_monomial(bg.delta, cur, k, n)));
}

}  // namespace zamolod
