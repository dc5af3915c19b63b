#pragma once

#include "biagram.hpp"
#include "iso.hpp"
#include "transform.hpp"

#include <functional>
#include <map>
#include <regex>

namespace zamolod {

struct InvalidSpec : Error {
    using Error::Error;
};

struct FamilySpec {
    std::string id;
    int n = 0;
    int m = 0;
    std::string variant;

    bool operator==(const FamilySpec&) const = default;
};

// ---------------------------------------------------------------- basic products

// vertex (g, d) with g in t1, d in t2 sits at d * |t1| + g; Gamma copies t1, Delta copies t2
inline DynkinBiagram tensor(const DynkinType& t1, const DynkinType& t2) {
    IMat a1 = template_matrix(t1), a2 = template_matrix(t2);
    auto c1 = template_coloring(t1), c2 = template_coloring(t2);
    int r1 = t1.rank, r2 = t2.rank, n = r1 * r2;
    IMat g = zeros(n), d = zeros(n);
    std::vector<Color> eps(n);
    for (int x = 0; x < r2; ++x)
        for (int a = 0; a < r1; ++a) {
            int u = x * r1 + a;
            eps[u] = c1[a] == c2[x] ? Color::white : Color::black;
            for (int b = 0; b < r1; ++b) g[u][x * r1 + b] = a1[a][b];
            for (int y = 0; y < r2; ++y) d[u][y * r1 + a] = a2[x][y];
        }
    return make_biagram(std::move(g), std::move(d), std::move(eps));
}

// Gamma = diag(A, A), Delta = antidiag(A, A)
inline DynkinBiagram twist(const DynkinType& t) {
    IMat a = template_matrix(t);
    auto c = template_coloring(t);
    int r = t.rank, n = 2 * r;
    IMat g = zeros(n), d = zeros(n);
    std::vector<Color> eps(n);
    for (int i = 0; i < r; ++i) {
        eps[i] = eps[r + i] = c[i];
        for (int j = 0; j < r; ++j) {
            g[i][j] = g[r + i][r + j] = a[i][j];
            d[i][r + j] = d[r + i][j] = a[i][j];
        }
    }
    return make_biagram(std::move(g), std::move(d), std::move(eps));
}

inline DynkinBiagram dual(const DynkinBiagram& bg) { return make_biagram(bg.delta, bg.gamma, bg.eps); }

// ---------------------------------------------------------------- chains

// Delta between consecutive components: fwd is left x right, back is right x left
struct Link {
    IMat fwd;
    IMat back;
};

inline Link parallel_link(int r) { return {identity_mat(r), identity_mat(r)}; }

inline Link twist_link(const DynkinType& t) {
    IMat a = template_matrix(t);
    return {a, a};
}

// the two Gamma components of a binding, matched to the given templates
inline Link extract_binding(const DynkinBiagram& x, const DynkinType& left, const DynkinType& right) {
    auto comps = support_components(x.gamma);
    if (comps.size() != 2) throw Error("binding must have exactly two gamma components");
    IMat tl = template_matrix(left), tr = template_matrix(right);
    for (int flip = 0; flip < 2; ++flip) {
        auto pl = match_template(x.gamma, comps[flip], tl);
        auto pr = match_template(x.gamma, comps[1 - flip], tr);
        if (!pl || !pr) continue;
        Link L{IMat(left.rank, std::vector<long long>(right.rank, 0)),
               IMat(right.rank, std::vector<long long>(left.rank, 0))};
        for (int a = 0; a < left.rank; ++a)
            for (int b = 0; b < right.rank; ++b) {
                L.fwd[a][b] = x.delta[(*pl)[a]][(*pr)[b]];
                L.back[b][a] = x.delta[(*pr)[b]][(*pl)[a]];
            }
        return L;
    }
    throw Error("binding components do not match " + left.name() + " and " + right.name());
}

inline DynkinBiagram assemble_chain(const std::vector<DynkinType>& comps, const std::vector<Link>& links) {
    if (links.size() + 1 != comps.size()) throw Error("chain needs one link between consecutive components");
    std::vector<int> off;
    int n = 0;
    for (auto& t : comps) {
        off.push_back(n);
        n += t.rank;
    }
    IMat g = zeros(n), d = zeros(n);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        IMat a = template_matrix(comps[c]);
        for (int i = 0; i < comps[c].rank; ++i)
            for (int j = 0; j < comps[c].rank; ++j) g[off[c] + i][off[c] + j] = a[i][j];
    }
    for (std::size_t c = 0; c + 1 < comps.size(); ++c)
        for (int i = 0; i < comps[c].rank; ++i)
            for (int j = 0; j < comps[c + 1].rank; ++j) {
                d[off[c] + i][off[c + 1] + j] = links[c].fwd[i][j];
                d[off[c + 1] + j][off[c] + i] = links[c].back[j][i];
            }
    return make_biagram(std::move(g), std::move(d));
}

// X == ... == X * Y == ... == Y with a copies of X and b copies of Y
inline DynkinBiagram binding_chain(const DynkinType& x, int a, const Link& bind, const DynkinType& y, int b) {
    std::vector<DynkinType> comps;
    std::vector<Link> links;
    for (int i = 0; i < a; ++i) {
        comps.push_back(x);
        if (i + 1 < a) links.push_back(parallel_link(x.rank));
    }
    links.push_back(bind);
    for (int i = 0; i < b; ++i) {
        comps.push_back(y);
        if (i + 1 < b) links.push_back(parallel_link(y.rank));
    }
    return assemble_chain(comps, links);
}

// ---------------------------------------------------------------- ADE sources

// A_{2n-1} * D_{n+1}: A path v_1..v_{2n-1}, D path u_1..u_{n-1} with leaves u_n, u_{n+1} on u_{n-1};
// u_i ~ v_i, v_{2n-i} for i < n, and u_n, u_{n+1} ~ v_n. Vertices: v first, then u.
inline DynkinBiagram a_star_d(int n) {
    if (n < 2) throw InvalidSpec("A_{2n-1}*D_{n+1} needs n >= 2");
    int na = 2 * n - 1, nd = n + 1, N = na + nd;
    IMat g = zeros(N), d = zeros(N);
    auto V = [&](int i) { return i - 1; };
    auto U = [&](int i) { return na + i - 1; };
    auto red = [&](int x, int y) { g[x][y] = g[y][x] = 1; };
    auto blue = [&](int x, int y) { d[x][y] = d[y][x] = 1; };
    for (int i = 1; i < na; ++i) red(V(i), V(i + 1));
    for (int i = 1; i + 1 < n; ++i) red(U(i), U(i + 1));
    red(U(n - 1), U(n));
    red(U(n - 1), U(n + 1));
    for (int i = 1; i < n; ++i) {
        blue(U(i), V(i));
        blue(U(i), V(2 * n - i));
    }
    blue(U(n), V(n));
    blue(U(n + 1), V(n));
    return make_biagram(std::move(g), std::move(d));
}

// two E6 copies numbered 0-1-2-3-4 with 5 on 2
inline DynkinBiagram e6_star_e6() {
    IMat g = zeros(12), d = zeros(12);
    auto red = [&](int x, int y) { g[x][y] = g[y][x] = 1; };
    auto blue = [&](int x, int y) { d[x][y] = d[y][x] = 1; };
    for (int c : {0, 6}) {
        red(c + 0, c + 1);
        red(c + 1, c + 2);
        red(c + 2, c + 3);
        red(c + 3, c + 4);
        red(c + 2, c + 5);
    }
    const int a = 0, b = 6;
    blue(a + 0, b + 5);
    blue(a + 4, b + 5);
    blue(a + 1, b + 2);
    blue(a + 3, b + 2);
    blue(a + 2, b + 1);
    blue(a + 2, b + 3);
    blue(a + 5, b + 0);
    blue(a + 5, b + 4);
    return make_biagram(std::move(g), std::move(d));
}

// D5 on 0..4 (0-1-2, leaves 3, 4 on 2) and A7 on 5..11
inline DynkinBiagram d5_box_a7() {
    IMat g = zeros(12), d = zeros(12);
    auto red = [&](int x, int y) { g[x][y] = g[y][x] = 1; };
    auto blue = [&](int x, int y) { d[x][y] = d[y][x] = 1; };
    red(0, 1);
    red(1, 2);
    red(2, 3);
    red(2, 4);
    for (int i = 5; i < 11; ++i) red(i, i + 1);
    const int u = 5;
    blue(0, u + 3);
    blue(1, u + 2);
    blue(1, u + 4);
    blue(2, u + 1);
    blue(2, u + 5);
    blue(2, u + 3);
    blue(3, u + 0);
    blue(3, u + 4);
    blue(4, u + 6);
    blue(4, u + 2);
    return make_biagram(std::move(g), std::move(d));
}

// ---------------------------------------------------------------- non-ADE double bindings

// B3 bowtie_1 G2 exactly as the worked 5x5 example: black 0, 2, 3; white 1, 4
inline DynkinBiagram b3_bowtie1_g2() {
    IMat g = {{0, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 0, 0, 3}, {0, 0, 0, 1, 0}};
    IMat d = {{0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 2}, {0, 3, 0, 0, 0}, {1, 0, 1, 0, 0}};
    return make_biagram(g, d, {Color::black, Color::white, Color::black, Color::black, Color::white});
}

// B_n bowtie C_n ladder: bottom b_0..b_{n-1} (B_n, end b_{n-1}), top t_0..t_{n-1} (C_n, end t_{n-1})
inline DynkinBiagram bn_bowtie_cn(int n) {
    if (n < 2) throw InvalidSpec("B_n bowtie C_n needs n >= 2");
    int N = 2 * n;
    IMat g = zeros(N), d = zeros(N);
    auto B = [&](int i) { return i; };
    auto T = [&](int i) { return n + i; };
    for (int i = 0; i + 1 < n; ++i) {
        g[B(i)][B(i + 1)] = g[B(i + 1)][B(i)] = 1;
        g[T(i)][T(i + 1)] = g[T(i + 1)][T(i)] = 1;
    }
    g[B(n - 1)][B(n - 2)] = 2;
    g[T(n - 2)][T(n - 1)] = 2;
    for (int i = 0; i + 2 < n; ++i) {
        d[B(i)][T(i + 1)] = d[T(i + 1)][B(i)] = 1;
        d[T(i)][B(i + 1)] = d[B(i + 1)][T(i)] = 1;
    }
    d[B(n - 2)][T(n - 1)] = 2;
    d[T(n - 1)][B(n - 2)] = 1;
    d[B(n - 1)][T(n - 2)] = 2;
    d[T(n - 2)][B(n - 1)] = 1;
    return make_biagram(std::move(g), std::move(d));
}

// D_{n+1} x D_{n+1} with the leaves 0, 1 of the first copy folded
inline std::vector<int> twist_leaf_fold_perm(int n) {
    return perm_from_cycles(2 * (n + 1), {{0, 1}});
}

inline DynkinBiagram bn_ltimes_dn1(int n) {
    if (n < 2) throw InvalidSpec("B_n ltimes D_{n+1} needs n >= 2");
    return fold(twist({Family::D, n + 1}), twist_leaf_fold_perm(n));
}

inline DynkinBiagram cn_ltimes_dn1(int n) { return global_flip(bn_ltimes_dn1(n)); }

// G2 ltimes_1 D4: twist(D4) with the three leaves 0, 1, 3 of the first copy folded
inline DynkinBiagram g2_ltimes_d4(int which) {
    auto f = fold(twist({Family::D, 4}), perm_from_cycles(8, {{0, 1, 3}}));
    return which == 1 ? f : global_flip(f);
}

// fold the two leaves of the D4 copy in G2 ltimes D4 (D4 copy sits at 1..4 with center 2)
inline DynkinBiagram g2_bowtie_b3(int which) {
    auto src = g2_ltimes_d4(which);
    // after folding, orbits are {0,1,3}, {2}, {4}, {5}, {6}, {7}: D4 copy at 2..5 with center 4
    return fold(src, perm_from_cycles(src.n, {{2, 3}}));
}

inline DynkinBiagram b3_bowtie_g2(int which) {
    if (which == 1) return b3_bowtie1_g2();
    return g2_bowtie_b3(2);
}

// C3 bowtie_1 G2 folds the D4 side of C3 ltimes D4 by a 3-cycle; bowtie_2 is the flip of B3 bowtie_1 G2
inline DynkinBiagram c3_bowtie_g2(int which) {
    if (which == 2) return global_flip(b3_bowtie1_g2());
    auto src = cn_ltimes_dn1(3);
    // orbits of the first fold: {0,1}, 2, 3, then the D4 copy at 3..6 with leaves 3, 4, 6 and center 5
    return fold(src, perm_from_cycles(src.n, {{3, 4, 6}}));
}

inline std::vector<int> d5a7_fold_perm() {
    // D5 leaves 3 <-> 4, A7 reflection 5+k <-> 11-k
    return perm_from_cycles(12, {{3, 4}, {5, 11}, {6, 10}, {7, 9}});
}

inline DynkinBiagram b4_box_c4() { return fold(d5_box_a7(), d5a7_fold_perm()); }

// ---------------------------------------------------------------- bindings as duals of chains

inline Link b2_ltimes_d3_link(bool transposed) {
    auto x = bn_ltimes_dn1(2);
    if (transposed) x = global_flip(x);
    return extract_binding(x, {transposed ? Family::C : Family::B, 2}, {Family::D, 3});
}

// B_n * C_n := (B2 == ... == B2 x B2)^*
inline DynkinBiagram bn_star_cn(int n) {
    if (n < 2) throw InvalidSpec("B_n * C_n needs n >= 2");
    DynkinType b2{Family::B, 2};
    return dual(binding_chain(b2, n - 1, twist_link(b2), b2, 1));
}

// F4 * F4 := (B2 == B2 x B2 == B2)^*
inline DynkinBiagram f4_star_f4() {
    DynkinType b2{Family::B, 2};
    return dual(binding_chain(b2, 2, twist_link(b2), b2, 2));
}

// A_{2n-1} * B_n := (D3 == ... == D3 rtimes B2)^*, C_2 for A_{2n-1} * C_n
inline DynkinBiagram bn_star_a(int n, bool c_side) {
    if (n < 2) throw InvalidSpec("A_{2n-1} * B_n needs n >= 2");
    DynkinType d3{Family::D, 3}, x2{c_side ? Family::C : Family::B, 2};
    Link l = b2_ltimes_d3_link(c_side);
    Link rev{l.back, l.fwd};
    return dual(binding_chain(d3, n - 1, rev, x2, 1));
}

// B_n * D_{n+1} := (C2 == ... == C2 ltimes D3)^*, B_2 chain for C_n * D_{n+1}
inline DynkinBiagram bn_star_d(int n, bool c_side) {
    if (n < 2) throw InvalidSpec("B_n * D_{n+1} needs n >= 2");
    bool transposed = !c_side;
    DynkinType x2{transposed ? Family::C : Family::B, 2}, d3{Family::D, 3};
    return dual(binding_chain(x2, n - 1, b2_ltimes_d3_link(transposed), d3, 1));
}

// E6 *_1 F4 := (B2 == B2 ltimes D3 == D3)^*, *_2 with C2
inline DynkinBiagram f4_star_e6(int which) {
    bool transposed = which == 2;
    DynkinType x2{transposed ? Family::C : Family::B, 2}, d3{Family::D, 3};
    return dual(binding_chain(x2, 2, b2_ltimes_d3_link(transposed), d3, 2));
}

// ---------------------------------------------------------------- family table

struct FamilyInfo {
    std::string id;
    std::string label;
    std::string group;  // tensor, twist, ADE, double binding, binding, chain
    bool uses_n = false;
    bool uses_m = false;
    int min_n = 0;
    int min_m = 0;
    int nominal_n = 0;  // size class for fixed families, used by sweep bounds
    std::function<int(int, int)> rank;
    std::function<DynkinBiagram(int, int)> make;
};

namespace detail {

inline Link binding_link(const DynkinBiagram& x, DynkinType l, DynkinType r) { return extract_binding(x, l, r); }

// chain with a copies of the left factor and b of the right
inline FamilyInfo chain_family(std::string id, std::string label, std::function<DynkinType(int)> lt,
                               std::function<DynkinType(int)> rt, std::function<DynkinBiagram(int)> bind,
                               int kind, int min_n = 2) {
    // kind 0: L R^{m-1}; kind 1: L^{m-1} R; kind 2: L L R R
    FamilyInfo f;
    f.id = std::move(id);
    f.label = std::move(label);
    f.group = "chain";
    f.uses_n = min_n > 0;
    f.uses_m = kind != 2;
    f.min_n = min_n;
    f.min_m = kind == 2 ? 0 : 2;
    auto counts = [kind](int m) -> std::pair<int, int> {
        if (kind == 0) return {1, m - 1};
        if (kind == 1) return {m - 1, 1};
        return {2, 2};
    };
    f.rank = [lt, rt, counts](int n, int m) {
        auto [a, b] = counts(m);
        return a * lt(n).rank + b * rt(n).rank;
    };
    f.make = [lt, rt, bind, counts](int n, int m) {
        auto [a, b] = counts(m);
        DynkinType L = lt(n), R = rt(n);
        return binding_chain(L, a, binding_link(bind(n), L, R), R, b);
    };
    return f;
}

inline FamilyInfo fixed_family(std::string id, std::string label, std::string group, int nominal,
                               std::function<DynkinBiagram()> make) {
    FamilyInfo f;
    f.id = std::move(id);
    f.label = std::move(label);
    f.group = std::move(group);
    f.nominal_n = nominal;
    auto cached = std::make_shared<std::optional<DynkinBiagram>>();
    f.make = [make, cached](int, int) {
        if (!*cached) *cached = make();
        return **cached;
    };
    f.rank = [f](int, int) { return static_cast<int>(f.make(0, 0).n); };
    return f;
}

inline FamilyInfo n_family(std::string id, std::string label, std::string group, int min_n,
                           std::function<int(int)> rank, std::function<DynkinBiagram(int)> make) {
    FamilyInfo f;
    f.id = std::move(id);
    f.label = std::move(label);
    f.group = std::move(group);
    f.uses_n = true;
    f.min_n = min_n;
    f.rank = [rank](int n, int) { return rank(n); };
    f.make = [make](int n, int) { return make(n); };
    return f;
}

inline FamilyInfo nm_family(std::string id, std::string label, std::string group, int min_n, int min_m,
                            std::function<int(int, int)> rank, std::function<DynkinBiagram(int, int)> make) {
    FamilyInfo f;
    f.id = std::move(id);
    f.label = std::move(label);
    f.group = std::move(group);
    f.uses_n = f.uses_m = true;
    f.min_n = min_n;
    f.min_m = min_m;
    f.rank = std::move(rank);
    f.make = std::move(make);
    return f;
}

inline DynkinType tB(int n) { return {Family::B, n}; }
inline DynkinType tC(int n) { return {Family::C, n}; }
inline DynkinType tA(int n) { return {Family::A, 2 * n - 1}; }
inline DynkinType tD(int n) { return {Family::D, n + 1}; }
inline DynkinType tF(int) { return {Family::F, 4}; }
inline DynkinType tE(int) { return {Family::E, 6}; }
inline DynkinType tB2(int) { return {Family::B, 2}; }

// (A^{m-1}D)_n: m-1 copies of A_{2n-1} then D_{n+1}; (AD^{m-1})_n: A_{2n-1} then m-1 copies of D_{n+1}
inline DynkinBiagram ade_chain(int n, int m, bool many_a) {
    auto x = a_star_d(n);
    DynkinType A = tA(n), D = tD(n);
    Link l = extract_binding(x, A, D);
    return many_a ? binding_chain(A, m - 1, l, D, 1) : binding_chain(A, 1, l, D, m - 1);
}

}  // namespace detail

inline const std::vector<FamilyInfo>& family_table() {
    using namespace detail;
    static const std::vector<FamilyInfo> table = [] {
        std::vector<FamilyInfo> t;
        // ADE sources
        t.push_back(n_family("A2n-1*Dn+1", "A_{2n-1} * D_{n+1}", "ADE", 2, [](int n) { return 3 * n; },
                             [](int n) { return a_star_d(n); }));
        t.push_back(fixed_family("E6*E6", "E6 * E6", "ADE", 6, [] { return e6_star_e6(); }));
        t.push_back(fixed_family("D5boxA7", "D5 box A7", "ADE", 4, [] { return d5_box_a7(); }));
        t.push_back(nm_family(
            "A^{m-1}D_n", "(A^{m-1} D)_n", "ADE", 2, 2, [](int n, int m) { return (m - 1) * (2 * n - 1) + n + 1; },
            [](int n, int m) { return ade_chain(n, m, true); }));
        t.push_back(nm_family(
            "AD^{m-1}_n", "(A D^{m-1})_n", "ADE", 2, 2, [](int n, int m) { return 2 * n - 1 + (m - 1) * (n + 1); },
            [](int n, int m) { return ade_chain(n, m, false); }));
        // double bindings
        t.push_back(n_family("BltD", "B_n ltimes D_{n+1}", "double binding", 2, [](int n) { return 2 * n + 1; },
                             [](int n) { return bn_ltimes_dn1(n); }));
        t.push_back(n_family("CltD", "C_n ltimes D_{n+1}", "double binding", 2, [](int n) { return 2 * n + 1; },
                             [](int n) { return cn_ltimes_dn1(n); }));
        t.push_back(n_family("BbowtieC", "B_n bowtie C_n", "double binding", 2, [](int n) { return 2 * n; },
                             [](int n) { return bn_bowtie_cn(n); }));
        t.push_back(fixed_family("GltD1", "G2 ltimes_1 D4", "double binding", 2, [] { return g2_ltimes_d4(1); }));
        t.push_back(fixed_family("GltD2", "G2 ltimes_2 D4", "double binding", 2, [] { return g2_ltimes_d4(2); }));
        t.push_back(fixed_family("B3bowtie1G2", "B3 bowtie_1 G2", "double binding", 3, [] { return b3_bowtie_g2(1); }));
        t.push_back(fixed_family("B3bowtie2G2", "B3 bowtie_2 G2", "double binding", 3, [] { return b3_bowtie_g2(2); }));
        t.push_back(fixed_family("C3bowtie1G2", "C3 bowtie_1 G2", "double binding", 3, [] { return c3_bowtie_g2(1); }));
        t.push_back(fixed_family("C3bowtie2G2", "C3 bowtie_2 G2", "double binding", 3, [] { return c3_bowtie_g2(2); }));
        t.push_back(fixed_family("B4boxC4", "B4 box C4", "double binding", 4, [] { return b4_box_c4(); }));
        // bindings
        t.push_back(n_family("B*A", "B_n * A_{2n-1}", "binding", 2, [](int n) { return 3 * n - 1; },
                             [](int n) { return bn_star_a(n, false); }));
        t.push_back(n_family("C*A", "C_n * A_{2n-1}", "binding", 2, [](int n) { return 3 * n - 1; },
                             [](int n) { return bn_star_a(n, true); }));
        t.push_back(n_family("B*C", "B_n * C_n", "binding", 2, [](int n) { return 2 * n; },
                             [](int n) { return bn_star_cn(n); }));
        t.push_back(n_family("B*D", "B_n * D_{n+1}", "binding", 2, [](int n) { return 2 * n + 1; },
                             [](int n) { return bn_star_d(n, false); }));
        t.push_back(n_family("C*D", "C_n * D_{n+1}", "binding", 2, [](int n) { return 2 * n + 1; },
                             [](int n) { return bn_star_d(n, true); }));
        t.push_back(fixed_family("F4*1E6", "F4 *_1 E6", "binding", 4, [] { return f4_star_e6(1); }));
        t.push_back(fixed_family("F4*2E6", "F4 *_2 E6", "binding", 4, [] { return f4_star_e6(2); }));
        t.push_back(fixed_family("F4*F4", "F4 * F4", "binding", 4, [] { return f4_star_f4(); }));
        // chains
        auto twist_b2 = [](int) { return twist({Family::B, 2}); };
        t.push_back(chain_family("B2xB2=B2^m", "B2 x B2 == ... == B2", tB2, tB2, twist_b2, 0, 0));
        t.push_back(chain_family("B2=B2xB2=B2", "B2 == B2 x B2 == B2", tB2, tB2, twist_b2, 2, 0));
        struct Pair {
            const char* l;
            const char* r;
            DynkinType (*lt)(int);
            DynkinType (*rt)(int);
            DynkinBiagram (*bind)(int);
        };
        const Pair pairs[] = {
            {"B", "A", tB, tA, [](int n) { return bn_star_a(n, false); }},
            {"C", "A", tC, tA, [](int n) { return bn_star_a(n, true); }},
            {"B", "C", tB, tC, [](int n) { return bn_star_cn(n); }},
            {"B", "D", tB, tD, [](int n) { return bn_star_d(n, false); }},
            {"C", "D", tC, tD, [](int n) { return bn_star_d(n, true); }},
        };
        for (auto& p : pairs) {
            std::string L = p.l, R = p.r;
            t.push_back(chain_family(L + R + "^{m-1}_n", "(" + L + R + "^{m-1})_n", p.lt, p.rt, p.bind, 0));
            t.push_back(chain_family(L + "^{m-1}" + R + "_n", "(" + L + "^{m-1}" + R + ")_n", p.lt, p.rt, p.bind, 1));
            t.push_back(chain_family(L + "=" + L + "*" + R + "=" + R + "_n",
                                     L + "_n == " + L + "_n * " + R + " == " + R, p.lt, p.rt, p.bind, 2));
        }
        for (int w : {1, 2}) {
            std::string s = std::to_string(w);
            auto bind = w == 1 ? +[](int) { return f4_star_e6(1); } : +[](int) { return f4_star_e6(2); };
            t.push_back(chain_family("F4E6^{m-1}_" + s, "(F4 E6^{m-1})_" + s, tF, tE, bind, 0, 0));
            t.push_back(chain_family("F4^{m-1}E6_" + s, "(F4^{m-1} E6)_" + s, tF, tE, bind, 1, 0));
            t.push_back(chain_family("F4=F4*" + s + "E6=E6", "F4 == F4 *_" + s + " E6 == E6", tF, tE, bind, 2, 0));
        }
        auto ff = [](int) { return f4_star_f4(); };
        t.push_back(chain_family("F4*F4=F4^m", "F4 * F4 == ... == F4", tF, tF, ff, 0, 0));
        t.push_back(chain_family("F4=F4*F4=F4", "F4 == F4 * F4 == F4", tF, tF, ff, 2, 0));
        return t;
    }();
    return table;
}

inline const FamilyInfo& family_info(const std::string& id) {
    for (auto& f : family_table())
        if (f.id == id) return f;
    throw InvalidSpec("unknown family '" + id + "'");
}

// "B3,A2" or "B3xA2"
inline std::pair<DynkinType, DynkinType> parse_type_pair(const std::string& v) {
    std::smatch mt;
    static const std::regex re(R"(^\s*([A-Ga-g]\d+)\s*[,x]\s*([A-Ga-g]\d+)\s*$)");
    if (!std::regex_match(v, mt, re)) throw InvalidSpec("expected two Dynkin types, got '" + v + "'");
    return {parse_type(mt[1]), parse_type(mt[2])};
}

// accepts "XxY-tensor" and "XxX-twist" shorthands
inline FamilySpec normalize_spec(FamilySpec s) {
    std::smatch mt;
    static const std::regex ten(R"(^([A-G]\d+)x([A-G]\d+)-tensor$)");
    static const std::regex tw(R"(^([A-G]\d+)x([A-G]\d+)-twist$)");
    if (std::regex_match(s.id, mt, ten)) return {"tensor", 0, 0, mt[1].str() + "," + mt[2].str()};
    if (std::regex_match(s.id, mt, tw)) {
        if (mt[1].str() != mt[2].str()) throw InvalidSpec("a twist needs two equal factors");
        return {"twist", 0, 0, mt[1].str()};
    }
    return s;
}

inline void check_spec(const FamilySpec& s0) {
    auto s = normalize_spec(s0);
    if (s.id == "tensor") {
        parse_type_pair(s.variant);
        return;
    }
    if (s.id == "twist") {
        parse_type(s.variant);
        return;
    }
    const auto& f = family_info(s.id);
    if (f.uses_n && s.n < f.min_n)
        throw InvalidSpec(s.id + " needs n >= " + std::to_string(f.min_n) + " (got " + std::to_string(s.n) + ")");
    if (f.uses_m && s.m < f.min_m)
        throw InvalidSpec(s.id + " needs m >= " + std::to_string(f.min_m) + " (got " + std::to_string(s.m) + ")");
}

inline DynkinBiagram build(const FamilySpec& s0) {
    auto s = normalize_spec(s0);
    check_spec(s);
    if (s.id == "tensor") {
        auto [a, b] = parse_type_pair(s.variant);
        return tensor(a, b);
    }
    if (s.id == "twist") return twist(parse_type(s.variant));
    return family_info(s.id).make(s.n, s.m);
}

inline std::string spec_name(const FamilySpec& s0) {
    auto s = normalize_spec(s0);
    if (s.id == "tensor") {
        auto [a, b] = parse_type_pair(s.variant);
        return a.name() + "(x)" + b.name();
    }
    if (s.id == "twist") return s.variant + "x" + s.variant;
    std::string r = s.id;
    const auto& f = family_info(s.id);
    if (f.uses_n) r += " n=" + std::to_string(s.n);
    if (f.uses_m) r += " m=" + std::to_string(s.m);
    return r;
}

inline int spec_rank(const FamilySpec& s0) {
    auto s = normalize_spec(s0);
    if (s.id == "tensor") {
        auto [a, b] = parse_type_pair(s.variant);
        return a.rank * b.rank;
    }
    if (s.id == "twist") return 2 * parse_type(s.variant).rank;
    return family_info(s.id).rank(s.n, s.m);
}

// types usable as tensor or twist factors, rank <= r (C2 is left out as a relabeled B2)
inline std::vector<DynkinType> types_up_to(int r) {
    std::vector<DynkinType> out;
    for (int k = 1; k <= r; ++k)
        for (auto& t : types_of_rank(k)) out.push_back(t);
    return out;
}

// every catalog member of total rank <= max_rank
inline std::vector<FamilySpec> members_up_to_rank(int max_rank) {
    std::vector<FamilySpec> out;
    auto types = types_up_to(max_rank);
    for (auto& a : types)
        for (auto& b : types)
            if (a.rank * b.rank <= max_rank) out.push_back({"tensor", 0, 0, a.name() + "," + b.name()});
    for (auto& a : types)
        if (2 * a.rank <= max_rank) out.push_back({"twist", 0, 0, a.name()});
    for (auto& f : family_table()) {
        if (!f.uses_n && !f.uses_m) {
            if (f.rank(0, 0) <= max_rank) out.push_back({f.id, 0, 0, ""});
            continue;
        }
        int n0 = f.uses_n ? f.min_n : 0;
        int m0 = f.uses_m ? f.min_m : 0;
        for (int n = n0; f.rank(n, m0) <= max_rank; ++n) {
            for (int m = m0; f.rank(n, m) <= max_rank; ++m) {
                out.push_back({f.id, f.uses_n ? n : 0, f.uses_m ? m : 0, ""});
                if (!f.uses_m) break;
            }
            if (!f.uses_n) break;
        }
    }
    return out;
}

// parameters n <= max_n, m <= max_m; tensor and twist factors of rank <= max_n
inline std::vector<FamilySpec> sweep_members(int max_n, int max_m) {
    std::vector<FamilySpec> out;
    auto types = types_up_to(max_n);
    for (auto& a : types)
        for (auto& b : types) out.push_back({"tensor", 0, 0, a.name() + "," + b.name()});
    for (auto& a : types) out.push_back({"twist", 0, 0, a.name()});
    for (auto& f : family_table()) {
        if (!f.uses_n && !f.uses_m) {
            if (f.nominal_n <= max_n) out.push_back({f.id, 0, 0, ""});
            continue;
        }
        int n0 = f.uses_n ? f.min_n : 0, n1 = f.uses_n ? max_n : 0;
        int m0 = f.uses_m ? f.min_m : 0, m1 = f.uses_m ? max_m : 0;
        for (int n = n0; n <= n1; ++n)
            for (int m = m0; m <= m1; ++m) out.push_back({f.id, n, m, ""});
    }
    return out;
}

}  // namespace zamolod
