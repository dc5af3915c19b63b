#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zamolod {

using Int = mpz_class;
using Rat = mpq_class;

// small nonnegative weight matrices (Coxeter adjacency)
using IMat = std::vector<std::vector<long long>>;
// arbitrary precision matrices (exchange matrices, phi_p values)
using ZMat = std::vector<std::vector<Int>>;

enum class Color : unsigned char { white, black };

inline Color opposite(Color c) { return c == Color::white ? Color::black : Color::white; }
inline char color_char(Color c) { return c == Color::white ? 'w' : 'b'; }

// parity of t on which a vertex of color c is populated
inline int parity_of(Color c) { return c == Color::white ? 0 : 1; }

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct InvalidMatrix : Error {
    using Error::Error;
};

struct NotBipartite : Error {
    using Error::Error;
};

inline IMat zeros(std::size_t n) { return IMat(n, std::vector<long long>(n, 0)); }

inline IMat identity_mat(std::size_t n) {
    IMat r = zeros(n);
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

inline IMat matmul(const IMat& a, const IMat& b) {
    std::size_t n = a.size();
    IMat r = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline IMat transpose(const IMat& a) {
    std::size_t n = a.size();
    IMat r = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[j][i] = a[i][j];
    return r;
}

inline bool is_zero(const IMat& a) {
    for (auto& row : a)
        for (auto x : row)
            if (x != 0) return false;
    return true;
}

inline IMat submatrix(const IMat& a, const std::vector<int>& idx) {
    IMat r = zeros(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r[i][j] = a[idx[i]][idx[j]];
    return r;
}

// connected components of the symmetric support of a (plus optional b)
inline std::vector<std::vector<int>> support_components(const IMat& a, const IMat* b = nullptr) {
    int n = static_cast<int>(a.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t h = 0; h < members.size(); ++h) {
            int u = members[h];
            for (int v = 0; v < n; ++v) {
                bool e = a[u][v] != 0 || a[v][u] != 0;
                if (b) e = e || (*b)[u][v] != 0 || (*b)[v][u] != 0;
                if (e && comp[v] < 0) {
                    comp[v] = comp[s];
                    members.push_back(v);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline std::string mat_to_string(const IMat& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (j) os << ',';
            os << a[i][j];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

// p/q or integer or decimal like -0.9
inline Rat parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t.push_back(c);
    if (t.empty()) throw Error("empty rational");
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string whole = t.substr(0, dot), frac = t.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
        if (whole.empty()) whole = "0";
        Int den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Int num;
        if (num.set_str(whole + frac, 10) != 0) throw Error("bad rational '" + s + "'");
        Rat r(num, den);
        r.canonicalize();
        return neg ? Rat(-r) : r;
    }
    Rat r;
    if (t[0] == '+') t = t.substr(1);
    if (r.set_str(t, 10) != 0) throw Error("bad rational '" + s + "'");
    if (r.get_den() == 0) throw Error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

// exact rationals print as integers when possible, else as finite decimals, else p/q
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    Int d = r.get_den();
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return r.get_str();
    int digits = std::max(twos, fives);
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat scaled = r * scale;
    Int num = scaled.get_num();
    bool neg = num < 0;
    if (neg) num = -num;
    std::string s = num.get_str();
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    s.insert(s.end() - digits, '.');
    return (neg ? "-" : "") + s;
}

}  // namespace zamolod
