#pragma once

#include <zamolod/dynkin.hpp>

#include <cmath>
#include <sstream>

namespace testing {

// One printed row: color set (white, black), bold entries marked by a trailing '*'.
struct ColorClassRow {
    const char* type;
    zamolod::Side side;
    const char* white;
    const char* black;
};

using zamolod::Side;

// simply-laced types have one row, used for both sides
inline const std::vector<ColorClassRow>& color_class_rows() {
    static const std::vector<ColorClassRow> rows = {
        {"A3", Side::left, "1.000 1.000", "1.000"},
        {"A4", Side::left, "1.000 1.618", "1.000 1.618"},
        {"A5", Side::left, "1.000 1.000 2.000", "1.000 1.000"},
        {"A7", Side::left, "1.000 1.000 2.414 2.414", "1.000 1.000 1.414"},
        {"B2", Side::left, "1.000", "1.000*"},
        {"B2", Side::right, "1.000", "1.000*"},
        {"B3", Side::left, "1.000 1.000*", "1.000"},
        {"B3", Side::right, "1.000 2.000*", "1.000"},
        {"B4", Side::left, "1.000 2.414", "1.000* 1.414"},
        {"B4", Side::right, "1.000 2.414", "1.000 1.414*"},
        {"B5", Side::left, "1.000 1.618* 2.618", "1.000 1.618"},
        {"B5", Side::right, "1.000 2.618 3.236*", "1.000 1.618"},
        {"B6", Side::left, "1.000 2.732 3.732", "1.000 1.000* 1.732"},
        {"B6", Side::right, "1.000 2.732 3.732", "1.000 1.732 2.000*"},
        {"B7", Side::left, "1.000 2.247* 2.802 4.049", "1.000 1.802 2.247"},
        {"B7", Side::right, "1.000 2.802 4.049 4.494*", "1.000 1.802 2.247"},
        {"B8", Side::left, "1.000 2.848 4.262 5.027", "1.000 1.307* 1.848 2.414"},
        {"B8", Side::right, "1.000 2.848 4.262 5.027", "1.000 1.848 2.414 2.613*"},
        {"B9", Side::left, "1.000 2.879 2.879* 4.411 5.411", "1.000 1.879 2.532 2.879"},
        {"B9", Side::right, "1.000 2.879 4.411 5.411 5.759*", "1.000 1.879 2.532 2.879"},
        {"C3", Side::left, "1.000 2.000*", "1.000"},
        {"C3", Side::right, "1.000 1.000*", "1.000"},
        {"C4", Side::left, "1.000 2.414", "1.000 1.414*"},
        {"C4", Side::right, "1.000 2.414", "1.000* 1.414"},
        {"C5", Side::left, "1.000 2.618 3.236*", "1.000 1.618"},
        {"C5", Side::right, "1.000 1.618* 2.618", "1.000 1.618"},
        {"C6", Side::left, "1.000 2.732 3.732", "1.000 1.732 2.000*"},
        {"C6", Side::right, "1.000 2.732 3.732", "1.000 1.000* 1.732"},
        {"C7", Side::left, "1.000 2.802 4.049 4.494*", "1.000 1.802 2.247"},
        {"C7", Side::right, "1.000 2.247* 2.802 4.049", "1.000 1.802 2.247"},
        {"C8", Side::left, "1.000 2.848 4.262 5.027", "1.000 1.848 2.414 2.613*"},
        {"C8", Side::right, "1.000 2.848 4.262 5.027", "1.000 1.307* 1.848 2.414"},
        {"C9", Side::left, "1.000 2.879 4.411 5.411 5.759*", "1.000 1.879 2.532 2.879"},
        {"C9", Side::right, "1.000 2.879 2.879* 4.411 5.411", "1.000 1.879 2.532 2.879"},
        {"D4", Side::left, "1.000 1.000 1.000", "1.000"},
        {"D5", Side::left, "1.000 1.000 1.414", "1.000 2.414"},
        {"D6", Side::left, "1.000 1.618 1.618 2.618", "1.000 1.618"},
        {"D7", Side::left, "1.000 1.000 1.000 1.732", "1.000 2.732 3.732"},
        {"E6", Side::left, "1.000 1.000 2.732", "1.000 1.366 1.366"},
        {"E7", Side::left, "1.000 1.879 2.532 2.879", "1.000 1.532 2.879"},
        {"E8", Side::left, "1.000 1.618 2.956 4.783", "1.000 1.209 1.618 1.956"},
        {"F4", Side::left, "1.000 1.366*", "1.000* 2.732"},
        {"F4", Side::right, "1.000 2.732*", "1.000* 1.366"},
        {"G2", Side::left, "1.000", "1.000*"},
        {"G2", Side::right, "1.000", "1.000*"},
    };
    return rows;
}

struct ParsedSet {
    std::vector<double> values;
    std::vector<double> bold;
};

inline ParsedSet parse_set(const char* s) {
    ParsedSet p;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        bool b = tok.back() == '*';
        if (b) tok.pop_back();
        double x = std::stod(tok);
        p.values.push_back(x);
        if (b) p.bold.push_back(x);
    }
    return p;
}

// template vertices whose entries differ between the left and right eigenvectors
inline std::vector<int> chiral_vertices(const zamolod::DynkinType& t) {
    using zamolod::Family;
    switch (t.family) {
        case Family::B:
        case Family::C: return {0};
        case Family::F: return {2, 3};
        case Family::G: return {1};
        default: return {};
    }
}

inline bool same3(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 5e-4) return false;
    return true;
}

// Empty string on agreement. The printed columns may use the opposite coloring of the
// template, so both assignments are tried; the bold entries must sit on the chiral vertices
// of the color class they are printed in.
inline std::string check_color_classes(const ColorClassRow& row) {
    auto t = zamolod::parse_type(row.type);
    auto w = parse_set(row.white), b = parse_set(row.black);
    auto cs = zamolod::color_sets(t, row.side);
    auto col = zamolod::template_coloring(t);
    auto v = zamolod::dominant_eigenvector(t, row.side);
    for (int swap = 0; swap < 2; ++swap) {
        const auto& ours_w = swap ? cs.second : cs.first;
        const auto& ours_b = swap ? cs.first : cs.second;
        if (!same3(ours_w, w.values) || !same3(ours_b, b.values)) continue;
        std::vector<double> bold_w, bold_b;
        for (int k : chiral_vertices(t)) {
            bool white = (col[k] == zamolod::Color::white) != static_cast<bool>(swap);
            double lo = std::numeric_limits<double>::infinity();
            for (int j = 0; j < t.rank; ++j)
                if (col[j] == col[k]) lo = std::min(lo, v[j]);
            (white ? bold_w : bold_b).push_back(v[k] / lo);
        }
        std::sort(bold_w.begin(), bold_w.end());
        std::sort(bold_b.begin(), bold_b.end());
        if (same3(bold_w, w.bold) && same3(bold_b, b.bold)) return "";
    }
    std::ostringstream os;
    os << row.type << (row.side == Side::left ? " left" : " right") << ": got {";
    for (double x : cs.first) os << ' ' << x;
    os << " } {";
    for (double x : cs.second) os << ' ' << x;
    os << " }";
    return os.str();
}

}  // namespace testing
