#pragma once

#include "biagram.hpp"
#include "exchange.hpp"

#include <map>

namespace zamolod {

// Laurent polynomial in v (q = v^2), exponent -> coefficient, no zero coefficients
using VPoly = std::map<int, Int>;
using VMat = std::vector<std::vector<VPoly>>;

inline VPoly vconst(const Int& c) {
    VPoly p;
    if (c != 0) p[0] = c;
    return p;
}

inline VPoly vmono(int e, const Int& c) {
    VPoly p;
    if (c != 0) p[e] = c;
    return p;
}

inline void vadd_into(VPoly& a, const VPoly& b, const Int& scale = 1) {
    for (auto& [e, c] : b) {
        auto [it, fresh] = a.try_emplace(e, c * scale);
        if (!fresh) {
            it->second += c * scale;
            if (it->second == 0) a.erase(it);
        }
    }
}

inline VPoly vmul(const VPoly& a, const VPoly& b) {
    VPoly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) vadd_into(r, VPoly{{ea + eb, ca * cb}});
    return r;
}

inline std::string vpoly_to_string(const VPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        auto& [e, c] = *it;
        Int a = abs(c);
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string mono = e == 0 ? "" : e == 1 ? "v" : "v^" + std::to_string(e);
        if (mono.empty())
            s += a.get_str();
        else
            s += (a == 1 ? "" : a.get_str() + "*") + mono;
    }
    return s;
}

inline VMat vzeros(std::size_t n) { return VMat(n, std::vector<VPoly>(n)); }

// a * b, skipping zero entries of a (the generators are sparse)
inline VMat vmatmul(const VMat& a, const VMat& b) {
    std::size_t n = a.size();
    VMat r = vzeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].empty()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].empty()) vadd_into(r[i][j], vmul(a[i][k], b[k][j]));
        }
    return r;
}

// ---------------------------------------------------------------- phi_p

// phi_0 = 0, phi_1 = 1, phi_{r+1} = t phi_r - phi_{r-1}; coefficients by degree
inline std::vector<Int> phi(int p) {
    if (p < 1) throw Error("phi needs p >= 1");
    std::vector<Int> prev{Int(0)}, cur{Int(1)};
    for (int r = 1; r < p; ++r) {
        std::vector<Int> next(cur.size() + 1, Int(0));
        for (std::size_t k = 0; k < cur.size(); ++k) next[k + 1] += cur[k];
        for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= prev[k];
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline double phi_eval(const std::vector<Int>& c, double t) {
    double s = 0;
    for (std::size_t k = c.size(); k-- > 0;) s = s * t + c[k].get_d();
    return s;
}

// sum_k c_k A^k as an exact integer matrix
inline ZMat phi_of_matrix(const std::vector<Int>& c, const IMat& a) {
    std::size_t n = a.size();
    ZMat az = to_zmat(a), acc = zmat(n), pw = zmat(n);
    for (std::size_t i = 0; i < n; ++i) pw[i][i] = 1;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) acc[i][j] += c[k] * pw[i][j];
        if (k + 1 < c.size()) {
            ZMat nx = zmat(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t l = 0; l < n; ++l) {
                    if (pw[i][l] == 0) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        if (az[l][j] != 0) nx[i][j] += pw[i][l] * az[l][j];
                }
            pw = std::move(nx);
        }
    }
    return acc;
}

inline bool is_zero(const ZMat& m) {
    for (auto& row : m)
        for (auto& x : row)
            if (x != 0) return false;
    return true;
}

// the bipartite graph with edge weights m is an I2(p)-cell iff phi_p(m) = 0
inline bool is_I2p_cell(const IMat& adjacency, int p) { return is_zero(phi_of_matrix(phi(p), adjacency)); }

// same question answered by type recognition: every component is Dynkin with h | p
inline bool is_I2p_cell_by_type(const IMat& adjacency, int p) {
    try {
        for (auto& c : decompose_components(adjacency).components)
            if (p % c.type.coxeter_number() != 0) return false;
        return true;
    } catch (const NonDynkinComponent&) {
        return false;
    }
}

// ---------------------------------------------------------------- cells

struct PropagationConflict : Error {
    int vertex;
    PropagationConflict(int v, const std::string& what) : Error(what), vertex(v) {}
};

struct RelationFailure {
    std::string relation;
    int row = -1, col = -1;
    std::string entry;
};

// tau as a bitmask over generators 1..4 (bit g for generator g)
using TauSet = unsigned;

inline TauSet tau_of(std::initializer_list<int> gens) {
    TauSet s = 0;
    for (int g : gens) s |= 1u << g;
    return s;
}

inline bool tau_has(TauSet s, int g) { return (s >> g) & 1u; }

inline std::string tau_to_string(TauSet s) {
    std::string r = "{";
    for (int g = 1; g <= 4; ++g)
        if (tau_has(s, g)) r += (r.size() > 1 ? "," : "") + std::to_string(g);
    return r + "}";
}

struct CellGraph {
    std::size_t n = 0;
    VMat m;                   // m[u][w]: weight of w in T_i(u)
    std::vector<TauSet> tau;
};

// the four seeds of a product cell; when one side is trivial the seeds act by the sign module on it
inline std::vector<TauSet> product_cell_seeds(const DynkinBiagram& bg) {
    bool g0 = is_zero(bg.gamma), d0 = is_zero(bg.delta);
    if (d0 && !g0) return {tau_of({1}), tau_of({2}), tau_of({1, 3, 4}), tau_of({2, 3, 4})};
    if (g0 && !d0) return {tau_of({3}), tau_of({4}), tau_of({1, 2, 3}), tau_of({1, 2, 4})};
    return {tau_of({1, 3}), tau_of({2, 3}), tau_of({1, 4}), tau_of({2, 4})};
}

// Gamma edges swap 1 <-> 2 in tau, Delta edges swap 3 <-> 4; m = Gamma + Delta
inline CellGraph build_product_cell(const DynkinBiagram& bg, TauSet seed, std::size_t seed_vertex = 0) {
    std::size_t n = bg.n;
    if (seed_vertex >= n) throw IndexOutOfRange("seed vertex out of range");
    if (!is_connected(bg)) throw Error("product cells need a connected biagram");
    const TauSet s12 = tau_of({1, 2}), s34 = tau_of({3, 4});
    auto swap_bits = [](TauSet t, TauSet mask) {
        TauSet part = t & mask;
        if (part == 0 || part == mask) return t;
        return (t & ~mask) | (mask & ~part);
    };
    CellGraph c{n, vzeros(n), std::vector<TauSet>(n, 0)};
    std::vector<bool> seen(n, false);
    c.tau[seed_vertex] = seed;
    seen[seed_vertex] = true;
    std::vector<std::size_t> q{seed_vertex};
    for (std::size_t h = 0; h < q.size(); ++h) {
        std::size_t u = q[h];
        for (std::size_t w = 0; w < n; ++w) {
            bool ge = bg.gamma[u][w] || bg.gamma[w][u], de = bg.delta[u][w] || bg.delta[w][u];
            if (!ge && !de) continue;
            TauSet want = ge ? swap_bits(c.tau[u], s12) : swap_bits(c.tau[u], s34);
            if (!seen[w]) {
                seen[w] = true;
                c.tau[w] = want;
                q.push_back(w);
            } else if (c.tau[w] != want) {
                throw PropagationConflict(static_cast<int>(w), "tau propagation conflict at vertex " +
                                                                   std::to_string(w + 1));
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w) {
            long long x = bg.gamma[u][w] + bg.delta[u][w];
            if (x) c.m[u][w] = vconst(Int(static_cast<long>(x)));
        }
    return c;
}

// T_i(u) = q u if i not in tau(u), else -u + v * sum over w with i not in tau(w) of m_uw w; column u is T_i(u)
inline VMat hecke_operator(const CellGraph& c, int i) {
    VMat t = vzeros(c.n);
    for (std::size_t u = 0; u < c.n; ++u) {
        if (!tau_has(c.tau[u], i)) {
            t[u][u] = vmono(2, 1);
            continue;
        }
        t[u][u] = vconst(-1);
        for (std::size_t w = 0; w < c.n; ++w)
            if (!tau_has(c.tau[w], i) && !c.m[u][w].empty()) vadd_into(t[w][u], vmul(vmono(1, 1), c.m[u][w]));
    }
    return t;
}

inline std::vector<VMat> hecke_operators(const CellGraph& c) {
    std::vector<VMat> ops;
    for (int i = 1; i <= 4; ++i) ops.push_back(hecke_operator(c, i));
    return ops;
}

struct HeckeReport {
    std::vector<RelationFailure> failures;
    int checked = 0;
    bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::optional<RelationFailure> first_difference(const VMat& a, const VMat& b, const std::string& name) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != b[i][j]) {
                VPoly d = a[i][j];
                vadd_into(d, b[i][j], -1);
                return RelationFailure{name, static_cast<int>(i), static_cast<int>(j), vpoly_to_string(d)};
            }
    return std::nullopt;
}

// alternating product x y x ... with len factors
inline VMat alternating(const VMat& x, const VMat& y, int len) {
    std::size_t n = x.size();
    VMat r = vzeros(n);
    for (std::size_t i = 0; i < n; ++i) r[i][i] = vconst(1);
    // build from the right so each step multiplies by a sparse generator on the left
    for (int k = len - 1; k >= 0; --k) r = vmatmul(k % 2 == 0 ? x : y, r);
    return r;
}

}  // namespace detail

// quadratic relations, the four commutators, and braid relations of lengths p ({1,2}) and q_order ({3,4})
inline HeckeReport verify_hecke_relations(const CellGraph& c, int p, int q_order) {
    HeckeReport rep;
    auto ops = hecke_operators(c);
    std::size_t n = c.n;
    VMat id = vzeros(n);
    for (std::size_t i = 0; i < n; ++i) id[i][i] = vconst(1);
    auto check = [&](const VMat& a, const VMat& b, const std::string& name) {
        ++rep.checked;
        if (auto f = detail::first_difference(a, b, name)) rep.failures.push_back(*f);
    };
    for (int i = 0; i < 4; ++i) {
        // (T - q)(T + 1) = T^2 + (1 - q) T - q
        VMat lhs = vmatmul(ops[i], ops[i]);
        VMat rhs = vzeros(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                vadd_into(rhs[a][b], vmul(ops[i][a][b], VPoly{{2, Int(1)}, {0, Int(-1)}}));
                if (a == b) vadd_into(rhs[a][b], vmono(2, 1));
            }
        check(lhs, rhs, "quadratic T" + std::to_string(i + 1));
    }
    for (auto [i, j] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 3}, std::pair{2, 4}})
        check(vmatmul(ops[i - 1], ops[j - 1]), vmatmul(ops[j - 1], ops[i - 1]),
              "commute T" + std::to_string(i) + " T" + std::to_string(j));
    check(detail::alternating(ops[0], ops[1], p), detail::alternating(ops[1], ops[0], p),
          "braid T1 T2 length " + std::to_string(p));
    check(detail::alternating(ops[2], ops[3], q_order), detail::alternating(ops[3], ops[2], q_order),
          "braid T3 T4 length " + std::to_string(q_order));
    return rep;
}

}  // namespace zamolod
