#pragma once

#include "core.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace zamolod {

struct InexactDivision : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

struct ExponentOverflow : Error {
    using Error::Error;
};

using Exps = std::vector<std::int32_t>;

// Sparse Laurent polynomial in x_1..x_n, terms ordered lexicographically by exponent.
struct LaurentPoly {
    std::size_t nvars = 0;
    std::map<Exps, Int> terms;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t n) : nvars(n) {}

    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    bool operator==(const LaurentPoly& o) const { return nvars == o.nvars && terms == o.terms; }

    static LaurentPoly constant(std::size_t n, const Int& c) {
        LaurentPoly p(n);
        if (c != 0) p.terms.emplace(Exps(n, 0), c);
        return p;
    }

    // x_i (0-based i)
    static LaurentPoly variable(std::size_t n, std::size_t i) {
        if (i >= n) throw IndexOutOfRange("variable index out of range");
        Exps e(n, 0);
        e[i] = 1;
        LaurentPoly p(n);
        p.terms.emplace(std::move(e), Int(1));
        return p;
    }

    static LaurentPoly monomial(Exps e, const Int& c = 1) {
        LaurentPoly p(e.size());
        if (c != 0) p.terms.emplace(std::move(e), c);
        return p;
    }
};

namespace detail {

inline std::int32_t checked_exp(long long v) {
    if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
        throw ExponentOverflow("exponent out of 32-bit range");
    return static_cast<std::int32_t>(v);
}

inline Exps add_exps(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_exp(static_cast<long long>(a[i]) + b[i]);
    return r;
}

inline Exps sub_exps(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_exp(static_cast<long long>(a[i]) - b[i]);
    return r;
}

inline void check_same(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars != b.nvars) throw Error("polynomials over different variable counts");
}

inline void accumulate(std::map<Exps, Int>& t, const Exps& e, const Int& c) {
    auto [it, fresh] = t.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

}  // namespace detail

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
    detail::check_same(a, b);
    LaurentPoly r = a;
    for (auto& [e, c] : b.terms) detail::accumulate(r.terms, e, c);
    return r;
}

inline LaurentPoly neg(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

inline LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) {
    detail::check_same(a, b);
    LaurentPoly r = a;
    for (auto& [e, c] : b.terms) detail::accumulate(r.terms, e, -c);
    return r;
}

inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
    detail::check_same(a, b);
    LaurentPoly r(a.nvars);
    for (auto& [ea, ca] : a.terms)
        for (auto& [eb, cb] : b.terms) detail::accumulate(r.terms, detail::add_exps(ea, eb), ca * cb);
    return r;
}

inline LaurentPoly pow(const LaurentPoly& a, unsigned k) {
    LaurentPoly r = LaurentPoly::constant(a.nvars, 1), base = a;
    while (k) {
        if (k & 1u) r = mul(r, base);
        k >>= 1u;
        if (k) base = mul(base, base);
    }
    return r;
}

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

// per-variable exponent range over all terms
inline std::pair<Exps, Exps> exponent_box(const LaurentPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("exponent box of the zero polynomial");
    Exps lo = p.terms.begin()->first, hi = lo;
    for (auto& [e, c] : p.terms)
        for (std::size_t i = 0; i < p.nvars; ++i) {
            lo[i] = std::min(lo[i], e[i]);
            hi[i] = std::max(hi[i], e[i]);
        }
    return {lo, hi};
}

// Quotient p / q in the Laurent ring; throws InexactDivision when q does not divide p.
// Long division on lex-leading terms, with quotient exponents confined to the box they must lie in.
inline LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    detail::check_same(p, q);
    if (q.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    LaurentPoly quo(p.nvars);
    if (p.is_zero()) return quo;
    if (q.size() == 1) {
        auto& [eq, cq] = *q.terms.begin();
        for (auto& [e, c] : p.terms) {
            if (!mpz_divisible_p(c.get_mpz_t(), cq.get_mpz_t())) throw InexactDivision("coefficient not divisible");
            Int r = c / cq;
            quo.terms.emplace(detail::sub_exps(e, eq), r);
        }
        return quo;
    }
    auto [plo, phi] = exponent_box(p);
    auto [qlo, qhi] = exponent_box(q);
    Exps lo = detail::sub_exps(plo, qlo), hi = detail::sub_exps(phi, qhi);
    auto& [lq, lc] = *q.terms.rbegin();
    LaurentPoly rem = p;
    while (!rem.is_zero()) {
        auto& [le, c] = *rem.terms.rbegin();
        Exps e = detail::sub_exps(le, lq);
        for (std::size_t i = 0; i < p.nvars; ++i)
            if (e[i] < lo[i] || e[i] > hi[i]) throw InexactDivision("quotient term leaves the exponent box");
        if (!mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) throw InexactDivision("coefficient not divisible");
        Int t = c / lc;
        for (auto& [eq, cq] : q.terms) detail::accumulate(rem.terms, detail::add_exps(e, eq), -t * cq);
        detail::accumulate(quo.terms, e, t);
    }
    return quo;
}

inline std::int32_t deg_max(std::size_t i, const LaurentPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
    if (i >= p.nvars) throw IndexOutOfRange("variable index out of range");
    std::int32_t d = std::numeric_limits<std::int32_t>::min();
    for (auto& [e, c] : p.terms) d = std::max(d, e[i]);
    return d;
}

inline std::int32_t deg_min(std::size_t i, const LaurentPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
    if (i >= p.nvars) throw IndexOutOfRange("variable index out of range");
    std::int32_t d = std::numeric_limits<std::int32_t>::max();
    for (auto& [e, c] : p.terms) d = std::min(d, e[i]);
    return d;
}

inline LaurentPoly monomial_from_exponents(const std::vector<long long>& exps) {
    Exps e(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw Error("monomial_from_exponents expects nonnegative exponents");
        e[i] = detail::checked_exp(exps[i]);
    }
    return LaurentPoly::monomial(std::move(e));
}

// Value at a positive point. With log_domain, returns the natural log of the value (which must be positive).
inline double eval_positive(const LaurentPoly& p, const std::vector<double>& point, bool log_domain = false) {
    if (point.size() != p.nvars) throw Error("evaluation point has the wrong dimension");
    for (double x : point)
        if (!(x > 0)) throw Error("evaluation point must be strictly positive");
    if (!log_domain) {
        double s = 0;
        for (auto& [e, c] : p.terms) {
            double t = c.get_d();
            for (std::size_t i = 0; i < p.nvars; ++i)
                if (e[i]) t *= std::pow(point[i], e[i]);
            s += t;
        }
        return s;
    }
    std::vector<double> logs;
    std::vector<int> sign;
    for (auto& [e, c] : p.terms) {
        Int a = abs(c);
        long exp2 = 0;
        double mant = mpz_get_d_2exp(&exp2, a.get_mpz_t());
        double l = std::log(mant) + exp2 * std::log(2.0);
        for (std::size_t i = 0; i < p.nvars; ++i) l += e[i] * std::log(point[i]);
        logs.push_back(l);
        sign.push_back(c > 0 ? 1 : -1);
    }
    if (logs.empty()) throw Error("log of the zero polynomial");
    double mx = *std::max_element(logs.begin(), logs.end());
    double s = 0;
    for (std::size_t k = 0; k < logs.size(); ++k) s += sign[k] * std::exp(logs[k] - mx);
    if (!(s > 0)) throw Error("polynomial value is not positive");
    return mx + std::log(s);
}

// max over terms of lambda . e
inline Rat tropical_eval(const LaurentPoly& p, const std::vector<Rat>& lambda) {
    if (p.is_zero()) throw ZeroPolynomial("tropical value of the zero polynomial");
    std::optional<Rat> best;
    for (auto& [e, c] : p.terms) {
        Rat s = 0;
        for (std::size_t i = 0; i < p.nvars; ++i)
            if (e[i]) s += lambda[i] * e[i];
        if (!best || s > *best) best = s;
    }
    return *best;
}

// Vertices of the Newton polytope reached by per-variable extremes and random integer directions
// (lex tie-break picks a vertex of the extremal face) must carry positive coefficients.
inline bool newton_positive_spot_check(const LaurentPoly& p, int random_directions = 16, std::uint64_t seed = 1) {
    if (p.is_zero()) return true;
    std::size_t n = p.nvars;
    auto extreme_ok = [&](const std::vector<long long>& w) {
        const Exps* best = nullptr;
        long long bv = 0;
        const Int* bc = nullptr;
        for (auto& [e, c] : p.terms) {
            long long v = 0;
            for (std::size_t i = 0; i < n; ++i) v += w[i] * e[i];
            if (!best || v > bv || (v == bv && e > *best)) {
                best = &e;
                bv = v;
                bc = &c;
            }
        }
        return *bc > 0;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (int s : {1, -1}) {
            std::vector<long long> w(n, 0);
            w[i] = s;
            if (!extreme_ok(w)) return false;
        }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-50, 50);
    for (int k = 0; k < random_directions; ++k) {
        // direction supported on a random pair of variables, plus a small generic perturbation
        std::vector<long long> w(n, 0);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::size_t a = pick(rng), b = pick(rng);
        w[a] += dist(rng) * 1000;
        w[b] += dist(rng) * 1000;
        for (auto& x : w) x += dist(rng) % 3;
        if (!extreme_ok(w)) return false;
    }
    return true;
}

// terms in descending lex order: 3*x1^2*x4^-1 + x2 - 5
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        auto& [e, c] = *it;
        Int a = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < p.nvars; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

inline LaurentPoly parse_laurent(const std::string& s, std::size_t nvars) {
    LaurentPoly p(nvars);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto fail = [&](const std::string& why) { throw Error("bad polynomial '" + s + "': " + why); };
    auto read_int = [&]() -> std::string {
        std::size_t st = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == st || (i == st + 1 && !std::isdigit(static_cast<unsigned char>(s[st])))) fail("expected integer");
        return s.substr(st, i - st);
    };
    skip();
    if (s.substr(i) == "0") return p;
    int sign = 1;
    if (i < s.size() && s[i] == '-') {
        sign = -1;
        ++i;
    }
    while (true) {
        skip();
        Int coef = 1;
        Exps e(nvars, 0);
        bool any = false;
        while (true) {
            skip();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coef *= Int(read_int());
            } else if (i < s.size() && s[i] == 'x') {
                ++i;
                std::string idx = read_int();
                long long k = std::stoll(idx);
                if (k < 1 || static_cast<std::size_t>(k) > nvars) fail("variable index out of range");
                long long d = 1;
                skip();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    d = std::stoll(read_int());
                }
                e[k - 1] = detail::checked_exp(e[k - 1] + d);
            } else {
                fail("expected a factor");
            }
            any = true;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        detail::accumulate(p.terms, e, sign * coef);
        skip();
        if (i >= s.size()) break;
        if (s[i] == '+')
            sign = 1;
        else if (s[i] == '-')
            sign = -1;
        else
            fail("expected + or -");
        ++i;
    }
    return p;
}

}  // namespace zamolod
