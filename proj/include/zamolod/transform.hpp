#pragma once

#include "biagram.hpp"

namespace zamolod {

struct ViolatesCondition : Error {
    std::string condition;  // "i", "ii", "iii" or "iv"
    int i = -1, j = -1;
    ViolatesCondition(std::string c, int a, int b, const std::string& what)
        : Error("automorphism violates condition (" + c + ") at " + std::to_string(a + 1) + "," +
                std::to_string(b + 1) + ": " + what),
          condition(std::move(c)), i(a), j(b) {}
};

struct RepresentativeMismatch : Error {
    using Error::Error;
};

struct BicoloredAutomorphism {
    std::vector<int> perm;
    std::vector<std::vector<int>> orbits;  // sorted by minimal member
    std::vector<int> orbit_of;
};

inline std::vector<std::vector<int>> perm_orbits(const std::vector<int>& perm) {
    std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> o;
        for (int x = static_cast<int>(s); !seen[x]; x = perm[x]) {
            seen[x] = true;
            o.push_back(x);
        }
        std::sort(o.begin(), o.end());
        out.push_back(o);
    }
    return out;
}

// conditions are tested in the order (iv), (ii), (iii), (i)
inline BicoloredAutomorphism validate_automorphism(const ExchangeMatrix& m, const std::vector<int>& perm) {
    std::size_t n = m.n;
    if (perm.size() != n) throw Error("permutation length does not match matrix size");
    std::vector<bool> hit(n, false);
    for (int x : perm) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || hit[x]) throw Error("not a permutation");
        hit[x] = true;
    }
    BicoloredAutomorphism f{perm, perm_orbits(perm), std::vector<int>(n)};
    for (std::size_t o = 0; o < f.orbits.size(); ++o)
        for (int x : f.orbits[o]) f.orbit_of[x] = static_cast<int>(o);
    for (auto& o : f.orbits)
        for (std::size_t a = 0; a < o.size(); ++a)
            for (std::size_t c = 0; c < o.size(); ++c) {
                if (m.b[o[a]][o[c]] != 0)
                    throw ViolatesCondition("iv", o[a], o[c], "entry inside one orbit is nonzero");
                for (std::size_t j = 0; j < n; ++j)
                    if (m.b[o[a]][j] * m.b[o[c]][j] < 0)
                        throw ViolatesCondition("ii", o[a], o[c], "opposite signs toward vertex " + std::to_string(j + 1));
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m.b[perm[i]][perm[j]] != m.b[i][j])
                throw ViolatesCondition("iii", static_cast<int>(i), static_cast<int>(j), "entry not preserved");
    for (std::size_t i = 0; i < n; ++i)
        if (m.eps[perm[i]] != m.eps[i]) throw ViolatesCondition("i", static_cast<int>(i), perm[i], "color changes");
    return f;
}

// f(B)_{IJ} = sum over i in I of b_ij, for any j in J
inline ExchangeMatrix fold(const ExchangeMatrix& m, const BicoloredAutomorphism& f) {
    std::size_t k = f.orbits.size();
    ZMat b = zmat(k);
    std::vector<Color> eps(k);
    for (std::size_t I = 0; I < k; ++I) {
        eps[I] = m.eps[f.orbits[I][0]];
        for (std::size_t J = 0; J < k; ++J) {
            bool first = true;
            for (int j : f.orbits[J]) {
                Int s = 0;
                for (int i : f.orbits[I]) s += m.b[i][j];
                if (first) {
                    b[I][J] = s;
                    first = false;
                } else if (s != b[I][J]) {
                    throw RepresentativeMismatch("fold depends on the representative of orbit " +
                                                 std::to_string(J + 1));
                }
            }
        }
    }
    return make_exchange(std::move(b), std::move(eps));
}

inline DynkinBiagram fold(const DynkinBiagram& bg, const std::vector<int>& perm) {
    auto m = to_exchange_matrix(bg);
    return from_exchange_matrix(fold(m, validate_automorphism(m, perm)));
}

inline DynkinBiagram global_flip(const DynkinBiagram& bg) {
    DynkinBiagram r{bg.n, transpose(bg.gamma), transpose(bg.delta), bg.eps};
    if (is_admissible(bg) != is_admissible(r)) throw Error("global flip changed admissibility");
    return r;
}

// permutation from a list of cycles (0-based)
inline std::vector<int> perm_from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    for (auto& c : cycles)
        for (std::size_t a = 0; a < c.size(); ++a) p[c[a]] = c[(a + 1) % c.size()];
    return p;
}

}  // namespace zamolod
