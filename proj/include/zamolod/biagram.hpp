#pragma once

#include "dynkin.hpp"
#include "exchange.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace zamolod {

struct DynkinBiagram {
    std::size_t n = 0;
    IMat gamma;
    IMat delta;
    std::vector<Color> eps;

    bool operator==(const DynkinBiagram&) const = default;
};

struct InvalidBiagram : Error {
    using Error::Error;
};

struct NonDynkinComponent : Error {
    std::vector<int> vertices;
    explicit NonDynkinComponent(std::vector<int> v)
        : Error("component is not a Dynkin diagram: " + list(v)), vertices(std::move(v)) {}

    static std::string list(const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
        return s + "}";
    }
};

struct MixedCoxeterNumbers : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

inline std::optional<std::string> biagram_violation(const DynkinBiagram& bg) {
    std::size_t n = bg.n;
    if (bg.gamma.size() != n || bg.delta.size() != n || bg.eps.size() != n) return std::string("size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (bg.gamma[i].size() != n || bg.delta[i].size() != n) return std::string("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            long long g = bg.gamma[i][j], d = bg.delta[i][j];
            auto at = " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (g < 0 || d < 0) return "negative weight" + at;
            if (g && d) return "gamma and delta overlap" + at;
            if ((g > 0) != (bg.gamma[j][i] > 0)) return "gamma support is not symmetric" + at;
            if ((d > 0) != (bg.delta[j][i] > 0)) return "delta support is not symmetric" + at;
            if ((g || d) && bg.eps[i] == bg.eps[j]) return "edge inside one color class" + at;
        }
    }
    return std::nullopt;
}

inline DynkinBiagram make_biagram(IMat gamma, IMat delta, std::vector<Color> eps) {
    DynkinBiagram bg{gamma.size(), std::move(gamma), std::move(delta), std::move(eps)};
    if (auto why = biagram_violation(bg)) throw InvalidBiagram(*why);
    return bg;
}

// bipartition inferred from the union support, lowest index of each component white
inline DynkinBiagram make_biagram(IMat gamma, IMat delta) {
    std::size_t n = gamma.size();
    ZMat s = zmat(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = static_cast<long>(gamma[i][j] + delta[i][j]);
    auto eps = infer_bipartition(s);
    return make_biagram(std::move(gamma), std::move(delta), std::move(eps));
}

inline ExchangeMatrix to_exchange_matrix(const DynkinBiagram& bg) {
    return make_exchange(signed_sum(bg.gamma, bg.delta, bg.eps), bg.eps);
}

inline DynkinBiagram from_exchange_matrix(const ExchangeMatrix& m) {
    auto d = decompose(m);
    return make_biagram(d.gamma, d.delta, m.eps);
}

inline IMat commutator(const DynkinBiagram& bg) {
    IMat gd = matmul(bg.gamma, bg.delta), dg = matmul(bg.delta, bg.gamma);
    for (std::size_t i = 0; i < bg.n; ++i)
        for (std::size_t j = 0; j < bg.n; ++j) gd[i][j] -= dg[i][j];
    return gd;
}

inline bool is_admissible(const DynkinBiagram& bg) { return is_zero(commutator(bg)); }

// unordered pairs (i < j) on which the Gamma Delta and Delta Gamma path counts differ
inline std::vector<std::pair<int, int>> nonadmissible_pairs(const DynkinBiagram& bg) {
    IMat c = commutator(bg);
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < bg.n; ++i)
        for (std::size_t j = i + 1; j < bg.n; ++j)
            if (c[i][j] != 0 || c[j][i] != 0) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

inline bool is_connected(const DynkinBiagram& bg) {
    return support_components(bg.gamma, &bg.delta).size() <= 1;
}

// finds phi: template index -> vertex with m[phi a][phi b] = t[a][b]
inline std::optional<std::vector<int>> match_template(const IMat& m, const std::vector<int>& verts, const IMat& t) {
    int r = static_cast<int>(t.size());
    if (static_cast<int>(verts.size()) != r) return std::nullopt;
    std::vector<int> order{0}, parent(r, -1), tdeg(r, 0);
    std::vector<bool> seen(r, false);
    seen[0] = true;
    for (std::size_t h = 0; h < order.size(); ++h)
        for (int b = 0; b < r; ++b)
            if (t[order[h]][b] && !seen[b]) {
                seen[b] = true;
                parent[b] = order[h];
                order.push_back(b);
            }
    if (static_cast<int>(order.size()) != r) return std::nullopt;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) tdeg[a] += t[a][b] != 0;
    auto mdeg = [&](int x) {
        int d = 0;
        for (int y : verts) d += m[x][y] != 0;
        return d;
    };
    std::vector<int> phi(r, -1);
    std::vector<int> used;
    std::function<bool(int)> go = [&](int idx) -> bool {
        if (idx == r) return true;
        int a = order[idx];
        std::vector<int> cand;
        if (parent[a] < 0) {
            cand = verts;
        } else {
            int pv = phi[parent[a]];
            for (int y : verts)
                if (m[pv][y] || m[y][pv]) cand.push_back(y);
        }
        for (int x : cand) {
            if (std::find(used.begin(), used.end(), x) != used.end()) continue;
            if (mdeg(x) != tdeg[a]) continue;
            bool ok = true;
            for (int b = 0; b < r && ok; ++b) {
                if (phi[b] < 0) continue;
                ok = m[x][phi[b]] == t[a][b] && m[phi[b]][x] == t[b][a];
            }
            if (!ok) continue;
            phi[a] = x;
            used.push_back(x);
            if (go(idx + 1)) return true;
            used.pop_back();
            phi[a] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return phi;
}

struct Component {
    std::vector<int> vertices;  // sorted
    DynkinType type;
    std::vector<int> order;     // order[a] = vertex playing template vertex a
};

struct ComponentDecomposition {
    std::vector<Component> components;
};

inline ComponentDecomposition decompose_components(const IMat& m) {
    ComponentDecomposition out;
    for (auto& verts : support_components(m)) {
        bool found = false;
        for (auto& t : types_of_rank(static_cast<int>(verts.size()))) {
            if (auto phi = match_template(m, verts, template_matrix(t))) {
                out.components.push_back({verts, t, *phi});
                found = true;
                break;
            }
        }
        if (!found) throw NonDynkinComponent(verts);
    }
    return out;
}

inline int shared_coxeter_number(const IMat& m, const char* which) {
    auto dec = decompose_components(m);
    int h = 0;
    for (auto& c : dec.components) {
        int hc = c.type.coxeter_number();
        if (h && hc != h)
            throw MixedCoxeterNumbers(std::string(which) + " components have Coxeter numbers " + std::to_string(h) +
                                      " and " + std::to_string(hc));
        h = hc;
    }
    return h;
}

// isolated vertices count as A1 components, so an empty matrix gives h = 2
inline std::pair<int, int> coxeter_numbers(const DynkinBiagram& bg) {
    return {shared_coxeter_number(bg.gamma, "gamma"), shared_coxeter_number(bg.delta, "delta")};
}

inline bool is_dynkin_biagram(const DynkinBiagram& bg) {
    try {
        decompose_components(bg.gamma);
        decompose_components(bg.delta);
        return true;
    } catch (const NonDynkinComponent&) {
        return false;
    }
}

inline bool vinberg_check(const IMat& cartan) {
    std::size_t n = cartan.size();
    IMat adj = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (cartan[i].size() != n || cartan[i][i] != 2) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) return false;
            adj[i][j] = -cartan[i][j];
        }
    }
    for (auto& verts : support_components(adj)) {
        bool known = false;
        for (auto& t : types_of_rank(static_cast<int>(verts.size())))
            if (match_template(adj, verts, template_matrix(t))) {
                known = true;
                break;
            }
        if (known) continue;
        // certificate alpha: Perron vector of the adjacency, then test A alpha > 0 directly
        IMat sub = submatrix(adj, verts);
        auto [alpha, r] = perron_vector(sub, Side::right, 10000, 1e-14);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            double s = 2.0 * alpha[i];
            for (std::size_t j = 0; j < verts.size(); ++j) s -= static_cast<double>(sub[i][j]) * alpha[j];
            if (!(s > 1e-9)) return false;
        }
    }
    return true;
}

enum class LabelingKind { strictly_subadditive, subadditive, fixed_point };

struct Labeling {
    std::vector<double> values;
    LabelingKind kind = LabelingKind::strictly_subadditive;
};

inline double column_sum(const IMat& m, const std::vector<double>& v, std::size_t k) {
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<double>(m[i][k]) * v[i];
    return s;
}

// 2 rho_k > sum_i Gamma_ik rho_i and the same for Delta, with a relative margin
inline bool check_strictly_subadditive(const DynkinBiagram& bg, const std::vector<double>& rho,
                                       double margin = 1e-9) {
    if (rho.size() != bg.n) return false;
    for (std::size_t k = 0; k < bg.n; ++k) {
        if (!(rho[k] > 0)) return false;
        double lim = 2.0 * rho[k] - margin * rho[k];
        if (!(column_sum(bg.gamma, rho, k) < lim) || !(column_sum(bg.delta, rho, k) < lim)) return false;
    }
    return true;
}

inline bool check_strictly_subadditive(const DynkinBiagram& bg, const std::vector<Rat>& rho) {
    if (rho.size() != bg.n) return false;
    for (std::size_t k = 0; k < bg.n; ++k) {
        if (rho[k] <= 0) return false;
        Rat g = 0, d = 0;
        for (std::size_t i = 0; i < bg.n; ++i) {
            g += Rat(static_cast<long>(bg.gamma[i][k])) * rho[i];
            d += Rat(static_cast<long>(bg.delta[i][k])) * rho[i];
        }
        if (!(g < 2 * rho[k]) || !(d < 2 * rho[k])) return false;
    }
    return true;
}

// left Perron vector of Gamma + Delta per connected component, min entry 1
inline std::vector<double> common_dominant_eigenvector(const DynkinBiagram& bg) {
    IMat sum = zeros(bg.n);
    for (std::size_t i = 0; i < bg.n; ++i)
        for (std::size_t j = 0; j < bg.n; ++j) sum[i][j] = bg.gamma[i][j] + bg.delta[i][j];
    std::vector<double> v(bg.n, 1.0);
    for (auto& verts : support_components(sum)) {
        auto [w, r] = perron_vector(submatrix(sum, verts), Side::left, 200000, 1e-15);
        double lo = *std::min_element(w.begin(), w.end());
        for (std::size_t a = 0; a < verts.size(); ++a) v[verts[a]] = w[a] / lo;
    }
    return v;
}

inline std::optional<Labeling> strictly_subadditive_labeling(const DynkinBiagram& bg) {
    if (biagram_violation(bg) || !is_admissible(bg) || !is_dynkin_biagram(bg)) return std::nullopt;
    auto v = common_dominant_eigenvector(bg);
    if (!check_strictly_subadditive(bg, v)) return std::nullopt;
    return Labeling{v, LabelingKind::strictly_subadditive};
}

inline double log_add_exp(double a, double b) {
    double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// relative residual max_k |rho_k^2 - (Gamma monomial + Delta monomial)| / rho_k^2
inline double fixed_point_residual(const DynkinBiagram& bg, const std::vector<double>& rho) {
    double worst = 0;
    for (std::size_t k = 0; k < bg.n; ++k) {
        double g = 0, d = 0;
        for (std::size_t i = 0; i < bg.n; ++i) {
            g += static_cast<double>(bg.gamma[i][k]) * std::log(rho[i]);
            d += static_cast<double>(bg.delta[i][k]) * std::log(rho[i]);
        }
        double rhs = log_add_exp(g, d);
        worst = std::max(worst, std::abs(std::expm1(rhs - 2.0 * std::log(rho[k]))));
    }
    return worst;
}

// Z-map iteration in the log domain from an upper bound alpha^{nu_k}, nu strictly subadditive
inline std::optional<Labeling> fixed_point_labeling(const DynkinBiagram& bg, double tol = 1e-12,
                                                    long max_iter = 1000000) {
    auto sub = strictly_subadditive_labeling(bg);
    if (!sub) return std::nullopt;
    const auto& nu = sub->values;
    std::size_t n = bg.n;
    double q = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        q = std::min(q, 2.0 * nu[k] - column_sum(bg.gamma, nu, k));
        q = std::min(q, 2.0 * nu[k] - column_sum(bg.delta, nu, k));
    }
    double log_alpha = 2.0 * std::log(2.0) / q;  // alpha^q = 4 > 2
    std::vector<double> x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = nu[k] * log_alpha;
    for (long it = 0; it < max_iter; ++it) {
        double step = 0;
        for (std::size_t k = 0; k < n; ++k) {
            y[k] = 0.5 * log_add_exp(column_sum(bg.gamma, x, k), column_sum(bg.delta, x, k));
            if (y[k] > x[k] + 1e-12 * std::max(1.0, x[k]) || y[k] <= 0)
                throw NoConvergence("Z-map iterate left the monotone envelope");
            step = std::max(step, std::abs(std::expm1(y[k] - x[k])));
        }
        x.swap(y);
        if (step < tol) {
            std::vector<double> rho(n);
            for (std::size_t k = 0; k < n; ++k) rho[k] = std::exp(x[k]);
            return Labeling{rho, LabelingKind::fixed_point};
        }
    }
    throw NoConvergence("Z-map did not converge in " + std::to_string(max_iter) + " iterations");
}

}  // namespace zamolod
