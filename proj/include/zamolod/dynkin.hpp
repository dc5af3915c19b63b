#pragma once

#include "core.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace zamolod {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

enum class Side { left, right };

struct InvalidType : Error {
    using Error::Error;
};

struct DynkinType {
    Family family = Family::A;
    int rank = 1;

    std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

    bool simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }

    int coxeter_number() const {
        switch (family) {
            case Family::A: return rank + 1;
            case Family::B:
            case Family::C: return 2 * rank;
            case Family::D: return 2 * rank - 2;
            case Family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
            case Family::F: return 12;
            case Family::G: return 6;
        }
        return 0;
    }

    // larger class first
    std::pair<int, int> color_type() const {
        int n = rank;
        switch (family) {
            case Family::A:
            case Family::B:
            case Family::C: return {(n + 1) / 2, n / 2};
            case Family::D:
                if (n % 2 == 0) return {n / 2 + 1, n / 2 - 1};
                return {(n + 1) / 2, n / 2};
            case Family::E: return rank == 6 ? std::pair{3, 3} : rank == 7 ? std::pair{4, 3} : std::pair{4, 4};
            case Family::F: return {2, 2};
            case Family::G: return {1, 1};
        }
        return {0, 0};
    }

    auto operator<=>(const DynkinType&) const = default;
};

// D3 is accepted as a construction alias of A3 (D_{n+1} with n = 2 in chains)
inline bool valid_type(const DynkinType& t) {
    switch (t.family) {
        case Family::A: return t.rank >= 1;
        case Family::B:
        case Family::C: return t.rank >= 2;
        case Family::D: return t.rank >= 3;
        case Family::E: return t.rank >= 6 && t.rank <= 8;
        case Family::F: return t.rank == 4;
        case Family::G: return t.rank == 2;
    }
    return false;
}

inline DynkinType make_type(Family f, int rank) {
    DynkinType t{f, rank};
    if (!valid_type(t)) throw InvalidType("no Dynkin type " + t.name());
    return t;
}

inline DynkinType parse_type(const std::string& s) {
    if (s.size() < 2) throw InvalidType("bad Dynkin type '" + s + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f < 'A' || f > 'G') throw InvalidType("bad Dynkin type '" + s + "'");
    int r = 0;
    try {
        std::size_t pos = 0;
        r = std::stoi(s.substr(1), &pos);
        if (pos != s.size() - 1) throw InvalidType("bad Dynkin type '" + s + "'");
    } catch (const std::logic_error&) {
        throw InvalidType("bad Dynkin type '" + s + "'");
    }
    return make_type(static_cast<Family>(f), r);
}

// Coxeter adjacency matrix in the canonical numbering.
// A_n: path. B_n: 0=>1 with weight 2 in row 0. C_n: transpose of B_n.
// D_n: 0-2, 1-2, 2-3-...  E_n: 0-2-3-...-(n-1) with 1 on 3.
// F4: 0-1, 1-2 with weight 2 in row 2, 2-3. G2: weight 3 in row 0.
inline IMat template_matrix(const DynkinType& t) {
    if (!valid_type(t)) throw InvalidType("no Dynkin type " + t.name());
    int n = t.rank;
    IMat a = zeros(n);
    auto edge = [&](int i, int j) { a[i][j] = a[j][i] = 1; };
    switch (t.family) {
        case Family::A:
        case Family::B:
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            if (t.family == Family::B) a[0][1] = 2;
            if (t.family == Family::C) a[1][0] = 2;
            break;
        case Family::D:
            edge(0, 2);
            edge(1, 2);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case Family::E:
            edge(0, 2);
            edge(1, 3);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case Family::F:
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            a[2][1] = 2;
            break;
        case Family::G:
            a[0][1] = 3;
            a[1][0] = 1;
            break;
    }
    return a;
}

// vertex 0 white, alternating along edges
inline std::vector<Color> template_coloring(const DynkinType& t) {
    IMat a = template_matrix(t);
    int n = t.rank;
    std::vector<int> col(n, -1);
    col[0] = 0;
    std::vector<int> q{0};
    for (std::size_t h = 0; h < q.size(); ++h)
        for (int v = 0; v < n; ++v)
            if (a[q[h]][v] && col[v] < 0) {
                col[v] = 1 - col[q[h]];
                q.push_back(v);
            }
    std::vector<Color> r(n);
    for (int i = 0; i < n; ++i) r[i] = col[i] == 0 ? Color::white : Color::black;
    return r;
}

// right: A v = lambda v; left: v^T A = lambda v^T; lambda = 2 cos(pi/h)
inline std::vector<double> dominant_eigenvector(const DynkinType& t, Side side) {
    if (!valid_type(t)) throw InvalidType("no Dynkin type " + t.name());
    const double pi = std::numbers::pi;
    int n = t.rank;
    std::vector<double> v(n);
    switch (t.family) {
        case Family::A:
            for (int k = 0; k < n; ++k) v[k] = std::sin((k + 1) * pi / (n + 1));
            break;
        case Family::B:
        case Family::C: {
            bool first_half = (t.family == Family::B) == (side == Side::left);
            for (int k = 0; k < n; ++k) v[k] = std::cos(k * pi / (2 * n));
            if (first_half) v[0] = 0.5;
            break;
        }
        case Family::D:
            v[0] = v[1] = 0.5;
            for (int k = 2; k < n; ++k) v[k] = std::cos((k - 1) * pi / (2 * n - 2));
            break;
        case Family::E: {
            double th = pi / t.coxeter_number();
            v[0] = std::sin(th) / std::sin(3 * th);
            v[1] = std::sin(th) / std::sin(2 * th);
            v[2] = std::sin(2 * th) / std::sin(3 * th);
            v[3] = 1.0;
            for (int k = 4; k < n; ++k) v[k] = std::sin((n - k) * th) / std::sin((n - 3) * th);
            break;
        }
        case Family::F: {
            double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
            if (side == Side::right)
                v = {1.0, 2.0 / (s6 - s2), 2.0 / (s3 - 1.0), s2};
            else
                v = {1.0, 2.0 / (s6 - s2), 1.0 / (s3 - 1.0), 1.0 / s2};
            break;
        }
        case Family::G:
            if (side == Side::right)
                v = {1.0, std::sqrt(3.0) / 3.0};
            else
                v = {1.0, std::sqrt(3.0)};
            break;
    }
    return v;
}

inline double dominant_eigenvalue(const DynkinType& t) {
    return 2.0 * std::cos(std::numbers::pi / t.coxeter_number());
}

using ColorSets = std::pair<std::vector<double>, std::vector<double>>;

// (white entries, black entries), each sorted and divided by its minimum
inline ColorSets color_sets(const DynkinType& t, Side side) {
    auto v = dominant_eigenvector(t, side);
    auto col = template_coloring(t);
    ColorSets cs;
    for (int k = 0; k < t.rank; ++k) (col[k] == Color::white ? cs.first : cs.second).push_back(v[k]);
    for (auto* s : {&cs.first, &cs.second}) {
        if (s->empty()) continue;
        std::sort(s->begin(), s->end());
        double lo = s->front();
        for (auto& x : *s) x /= lo;
    }
    return cs;
}

// Perron vector of a nonnegative irreducible matrix by shifted power iteration.
// side right: M v = r v; side left: v^T M = r v^T. Returns (vector normalized to max 1, r).
inline std::pair<std::vector<double>, double> perron_vector(const IMat& m, Side side, int max_iter = 100000,
                                                            double tol = 1e-15) {
    std::size_t n = m.size();
    std::vector<double> v(n, 1.0), w(n);
    double r = 0;
    for (int it = 0; it < max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = v[i];
            for (std::size_t j = 0; j < n; ++j) s += (side == Side::right ? m[i][j] : m[j][i]) * v[j];
            w[i] = s;
        }
        double mx = *std::max_element(w.begin(), w.end());
        double diff = 0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] /= mx;
            diff = std::max(diff, std::abs(w[i] - v[i]));
        }
        v.swap(w);
        r = mx - 1.0;
        if (diff < tol) break;
    }
    return {v, r};
}

// all types of a given rank, in recognition order (C2 omitted: it is B2 relabeled)
inline std::vector<DynkinType> types_of_rank(int r) {
    std::vector<DynkinType> out;
    out.push_back({Family::A, r});
    if (r >= 2) out.push_back({Family::B, r});
    if (r >= 3) out.push_back({Family::C, r});
    if (r >= 4) out.push_back({Family::D, r});
    if (r >= 6 && r <= 8) out.push_back({Family::E, r});
    if (r == 4) out.push_back({Family::F, 4});
    if (r == 2) out.push_back({Family::G, 2});
    return out;
}

}  // namespace zamolod
