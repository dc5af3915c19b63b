#pragma once

#include "core.hpp"

#include <deque>

namespace zamolod {

struct ExchangeMatrix {
    std::size_t n = 0;
    ZMat b;
    std::vector<Color> eps;

    bool operator==(const ExchangeMatrix& o) const { return n == o.n && b == o.b && eps == o.eps; }
};

struct SignedDecomposition {
    ZMat gamma_signed;
    ZMat delta_signed;
    IMat gamma;
    IMat delta;
};

inline ZMat zmat(std::size_t n) { return ZMat(n, std::vector<Int>(n, 0)); }

inline ZMat to_zmat(const IMat& a) {
    ZMat r = zmat(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = static_cast<long>(a[i][j]);
    return r;
}

// shape-only constructor; see invariant_violation for the full check
inline ExchangeMatrix make_exchange(ZMat b, std::vector<Color> eps) {
    ExchangeMatrix m;
    m.n = b.size();
    for (auto& row : b)
        if (row.size() != m.n) throw InvalidMatrix("exchange matrix is not square");
    if (eps.size() != m.n) throw InvalidMatrix("bipartition length does not match matrix size");
    m.b = std::move(b);
    m.eps = std::move(eps);
    return m;
}

inline ExchangeMatrix make_exchange(const IMat& b, std::vector<Color> eps) {
    return make_exchange(to_zmat(b), std::move(eps));
}

inline std::optional<std::vector<Rat>> find_symmetrizer(const ZMat& b) {
    std::size_t n = b.size();
    std::vector<Rat> c(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        c[s] = 1;
        for (std::size_t h = 0; h < comp.size(); ++h) {
            std::size_t i = comp[h];
            for (std::size_t j = 0; j < n; ++j) {
                if (b[i][j] == 0 && b[j][i] == 0) continue;
                // c_i b_ij = -c_j b_ji needs both nonzero with opposite signs
                if (b[i][j] == 0 || b[j][i] == 0) return std::nullopt;
                if (sgn(b[i][j]) == sgn(b[j][i])) return std::nullopt;
                if (seen[j]) continue;
                seen[j] = true;
                c[j] = -c[i] * Rat(b[i][j]) / Rat(b[j][i]);
                comp.push_back(j);
            }
        }
        Rat lo = c[comp[0]];
        for (auto i : comp) lo = std::min(lo, c[i]);
        for (auto i : comp) c[i] /= lo;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c[i] * Rat(b[i][j]) != -c[j] * Rat(b[j][i])) return std::nullopt;
    return c;
}

inline std::optional<std::vector<Rat>> find_symmetrizer(const ExchangeMatrix& m) { return find_symmetrizer(m.b); }

inline std::optional<std::string> invariant_violation(const ExchangeMatrix& m) {
    for (std::size_t i = 0; i < m.n; ++i) {
        if (m.b[i][i] != 0) return "nonzero diagonal entry at " + std::to_string(i + 1);
        for (std::size_t j = 0; j < m.n; ++j)
            if (m.eps[i] == m.eps[j] && m.b[i][j] != 0)
                return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       ") joins two vertices of the same color";
    }
    if (!find_symmetrizer(m)) return std::string("not skew-symmetrizable");
    return std::nullopt;
}

inline ExchangeMatrix checked_exchange(ZMat b, std::vector<Color> eps) {
    auto m = make_exchange(std::move(b), std::move(eps));
    if (auto why = invariant_violation(m)) throw InvalidMatrix(*why);
    return m;
}

// 2-colors the support graph, vertex of least index in each component white
inline std::vector<Color> infer_bipartition(const ZMat& b) {
    std::size_t n = b.size();
    std::vector<int> col(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            auto u = q.front();
            q.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (b[u][v] == 0 && b[v][u] == 0) continue;
                if (col[v] < 0) {
                    col[v] = 1 - col[u];
                    q.push_back(v);
                } else if (col[v] == col[u]) {
                    throw NotBipartite("odd cycle through vertices " + std::to_string(u + 1) + " and " +
                                       std::to_string(v + 1));
                }
            }
        }
    }
    std::vector<Color> eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = col[i] == 0 ? Color::white : Color::black;
    return eps;
}

inline ExchangeMatrix mutate(const ExchangeMatrix& m, std::size_t k) {
    if (k >= m.n) throw IndexOutOfRange("mutation index " + std::to_string(k + 1) + " out of range");
    ExchangeMatrix r = m;
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) {
            const Int& bij = m.b[i][j];
            if (i == k || j == k) {
                r.b[i][j] = -bij;
            } else {
                const Int& bik = m.b[i][k];
                const Int& bkj = m.b[k][j];
                if (bik > 0 && bkj > 0)
                    r.b[i][j] = bij + bik * bkj;
                else if (bik < 0 && bkj < 0)
                    r.b[i][j] = bij - bik * bkj;
            }
        }
    return r;
}

inline ExchangeMatrix bipartite_mutate(const ExchangeMatrix& m, Color color) {
    // vertices of one color are pairwise non-adjacent, so the order is irrelevant
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            if (m.eps[i] == color && m.eps[j] == color && m.b[i][j] != 0)
                throw InvalidMatrix("bipartite mutation on a matrix with an edge inside one color class");
    ExchangeMatrix r = m;
    for (std::size_t k = 0; k < m.n; ++k)
        if (m.eps[k] == color) r = mutate(r, k);
    return r;
}

inline ExchangeMatrix negated(const ExchangeMatrix& m) {
    ExchangeMatrix r = m;
    for (auto& row : r.b)
        for (auto& x : row) x = -x;
    return r;
}

inline bool is_recurrent(const ExchangeMatrix& m) {
    auto neg = negated(m);
    return bipartite_mutate(m, Color::white) == neg && bipartite_mutate(m, Color::black) == neg;
}

inline SignedDecomposition decompose(const ExchangeMatrix& m) {
    SignedDecomposition d;
    d.gamma_signed = zmat(m.n);
    d.delta_signed = zmat(m.n);
    d.gamma = zeros(m.n);
    d.delta = zeros(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) {
            const Int& x = m.b[i][j];
            if (x == 0) continue;
            Color ei = m.eps[i], ej = m.eps[j];
            bool g = (x > 0 && ei == Color::white && ej == Color::black) ||
                     (x < 0 && ei == Color::black && ej == Color::white);
            bool dl = (x > 0 && ei == Color::black && ej == Color::white) ||
                      (x < 0 && ei == Color::white && ej == Color::black);
            Int a = abs(x);
            if (!a.fits_slong_p()) throw InvalidMatrix("entry too large for an unsigned weight");
            if (g) {
                d.gamma_signed[i][j] = x;
                d.gamma[i][j] = a.get_si();
            } else if (dl) {
                d.delta_signed[i][j] = x;
                d.delta[i][j] = a.get_si();
            } else {
                throw InvalidMatrix("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") joins two vertices of the same color");
            }
        }
    return d;
}

// signs the unsigned pair with eps: gamma positive on (white, black), delta positive on (black, white)
inline ZMat signed_sum(const IMat& gamma, const IMat& delta, const std::vector<Color>& eps) {
    std::size_t n = gamma.size();
    ZMat b = zmat(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long g = gamma[i][j], d = delta[i][j];
            if (g) b[i][j] += static_cast<long>(eps[i] == Color::white ? g : -g);
            if (d) b[i][j] += static_cast<long>(eps[i] == Color::black ? d : -d);
        }
    return b;
}

inline ExchangeMatrix recompose(const SignedDecomposition& d, const std::vector<Color>& eps) {
    std::size_t n = d.gamma_signed.size();
    ZMat b = zmat(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = d.gamma_signed[i][j] + d.delta_signed[i][j];
    return make_exchange(std::move(b), eps);
}

}  // namespace zamolod
