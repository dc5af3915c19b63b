#pragma once

#include "biagram.hpp"

#include <map>

namespace zamolod {

enum class EpsMode { ignore, exact };

namespace detail {

// color refinement on the disjoint union of a and b
inline std::vector<int> refine_colors(const DynkinBiagram& a, const DynkinBiagram& b, EpsMode mode) {
    std::size_t na = a.n, n = a.n + b.n;
    auto G = [&](std::size_t i, std::size_t j) -> long long {
        if (i < na) return j < na ? a.gamma[i][j] : 0;
        return j >= na ? b.gamma[i - na][j - na] : 0;
    };
    auto D = [&](std::size_t i, std::size_t j) -> long long {
        if (i < na) return j < na ? a.delta[i][j] : 0;
        return j >= na ? b.delta[i - na][j - na] : 0;
    };
    auto E = [&](std::size_t i) { return i < na ? a.eps[i] : b.eps[i - na]; };
    std::vector<int> col(n, 0);
    if (mode == EpsMode::exact)
        for (std::size_t i = 0; i < n; ++i) col[i] = E(i) == Color::white ? 0 : 1;
    std::size_t classes = 0;
    for (int round = 0; round <= static_cast<int>(n); ++round) {
        std::map<std::vector<long long>, int> ids;
        std::vector<std::vector<long long>> sig(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::vector<long long>> nb;
            for (std::size_t j = 0; j < n; ++j) {
                long long g1 = G(i, j), g2 = G(j, i), d1 = D(i, j), d2 = D(j, i);
                if (g1 || g2 || d1 || d2) nb.push_back({g1, g2, d1, d2, col[j]});
            }
            std::sort(nb.begin(), nb.end());
            sig[i].push_back(col[i]);
            for (auto& e : nb) sig[i].insert(sig[i].end(), e.begin(), e.end());
            ids.emplace(sig[i], 0);
        }
        int next = 0;
        for (auto& [k, v] : ids) v = next++;
        for (std::size_t i = 0; i < n; ++i) col[i] = ids[sig[i]];
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return col;
}

}  // namespace detail

// map from vertices of a to vertices of b preserving gamma and delta weights
inline std::optional<std::vector<int>> find_isomorphism(const DynkinBiagram& a, const DynkinBiagram& b,
                                                        EpsMode mode = EpsMode::ignore) {
    if (a.n != b.n) return std::nullopt;
    std::size_t n = a.n;
    if (n == 0) return std::vector<int>{};
    auto col = detail::refine_colors(a, b, mode);
    std::vector<int> ca(col.begin(), col.begin() + n), cb(col.begin() + n, col.end());
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    // BFS order over a, rarest colors first as roots
    std::vector<int> order, parent(n, -1);
    std::vector<bool> seen(n, false);
    std::vector<int> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = static_cast<int>(i);
    std::map<int, int> freq;
    for (int c : ca) ++freq[c];
    std::stable_sort(roots.begin(), roots.end(), [&](int x, int y) { return freq[ca[x]] < freq[ca[y]]; });
    for (int r : roots) {
        if (seen[r]) continue;
        seen[r] = true;
        std::size_t start = order.size();
        order.push_back(r);
        for (std::size_t h = start; h < order.size(); ++h) {
            int u = order[h];
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v] && (a.gamma[u][v] || a.delta[u][v] || a.gamma[v][u] || a.delta[v][u])) {
                    seen[v] = true;
                    parent[v] = u;
                    order.push_back(static_cast<int>(v));
                }
        }
    }
    std::vector<int> phi(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> go = [&](std::size_t idx) -> bool {
        if (idx == n) return true;
        int x = order[idx];
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || cb[y] != ca[x]) continue;
            if (parent[x] >= 0) {
                int py = phi[parent[x]];
                if (!(b.gamma[py][y] || b.delta[py][y] || b.gamma[y][py] || b.delta[y][py])) continue;
            }
            bool ok = true;
            for (std::size_t k = 0; k < idx && ok; ++k) {
                int z = order[k], w = phi[z];
                ok = a.gamma[x][z] == b.gamma[y][w] && a.gamma[z][x] == b.gamma[w][y] &&
                     a.delta[x][z] == b.delta[y][w] && a.delta[z][x] == b.delta[w][y];
            }
            if (!ok) continue;
            phi[x] = static_cast<int>(y);
            used[y] = true;
            if (go(idx + 1)) return true;
            used[y] = false;
            phi[x] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return phi;
}

inline bool is_isomorphic(const DynkinBiagram& a, const DynkinBiagram& b, EpsMode mode = EpsMode::ignore) {
    return find_isomorphism(a, b, mode).has_value();
}

inline DynkinBiagram relabel(const DynkinBiagram& bg, const std::vector<int>& phi) {
    DynkinBiagram r{bg.n, zeros(bg.n), zeros(bg.n), std::vector<Color>(bg.n)};
    for (std::size_t i = 0; i < bg.n; ++i) {
        r.eps[phi[i]] = bg.eps[i];
        for (std::size_t j = 0; j < bg.n; ++j) {
            r.gamma[phi[i]][phi[j]] = bg.gamma[i][j];
            r.delta[phi[i]][phi[j]] = bg.delta[i][j];
        }
    }
    return r;
}

}  // namespace zamolod
