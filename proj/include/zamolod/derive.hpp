#pragma once

#include "catalog.hpp"

#include <json.hpp>

namespace zamolod {

struct NoDerivationRecorded : Error {
    using Error::Error;
};

struct DerivationStep {
    enum class Op { fold, flip } op = Op::flip;
    std::vector<int> perm;  // for fold, on the current vertex numbering
};

struct Derivation {
    FamilySpec source;
    std::vector<DerivationStep> steps;
};

// Recorded scripts. Indices are 0-based on the vertex numbering reached so far (orbits sorted by minimal
// member after each fold). Entries may be linear in n ("2n-1"); "reflect": [lo, hi] swaps lo+k with hi-k.
inline const nlohmann::json& derivation_scripts() {
    static const nlohmann::json data = nlohmann::json::parse(R"json(
{
  "BltD":        {"source": {"id": "twist", "variant": "D{n+1}"},
                  "steps": [{"op": "fold", "cycles": [[0, 1]]}]},
  "CltD":        {"source": {"id": "twist", "variant": "D{n+1}"},
                  "steps": [{"op": "fold", "cycles": [[0, 1]]}, {"op": "flip"}]},
  "BbowtieC":    {"source": {"id": "twist", "variant": "D{n+1}"},
                  "steps": [{"op": "fold", "cycles": [[0, 1]]}, {"op": "flip"},
                            {"op": "fold", "cycles": [["n", "n+1"]]}]},
  "GltD1":       {"source": {"id": "twist", "variant": "D4"},
                  "steps": [{"op": "fold", "cycles": [[0, 1, 3]]}]},
  "GltD2":       {"source": {"id": "twist", "variant": "D4"},
                  "steps": [{"op": "fold", "cycles": [[0, 1, 3]]}, {"op": "flip"}]},
  "B3bowtie1G2": {"source": {"id": "twist", "variant": "D4"},
                  "steps": [{"op": "fold", "cycles": [[0, 1]]}, {"op": "fold", "cycles": [[3, 4, 6]]}]},
  "B3bowtie2G2": {"source": {"id": "twist", "variant": "D4"},
                  "steps": [{"op": "fold", "cycles": [[0, 1]]}, {"op": "flip"},
                            {"op": "fold", "cycles": [[3, 4, 6]]}, {"op": "flip"}]},
  "C3bowtie1G2": {"source": {"id": "twist", "variant": "D4"},
                  "steps": [{"op": "fold", "cycles": [[0, 1, 3]]}, {"op": "flip"},
                            {"op": "fold", "cycles": [[2, 3]]}, {"op": "flip"}]},
  "C3bowtie2G2": {"source": {"id": "twist", "variant": "D4"},
                  "steps": [{"op": "fold", "cycles": [[0, 1]]}, {"op": "fold", "cycles": [[3, 4, 6]]},
                            {"op": "flip"}]},
  "B4boxC4":     {"source": {"id": "D5boxA7"},
                  "steps": [{"op": "fold", "cycles": [[3, 4], [5, 11], [6, 10], [7, 9]]}]},
  "B*A":         {"source": {"id": "A2n-1*Dn+1", "n": "n"},
                  "steps": [{"op": "fold", "cycles": [["3n-2", "3n-1"]]}]},
  "C*A":         {"source": {"id": "A2n-1*Dn+1", "n": "n"},
                  "steps": [{"op": "fold", "cycles": [["3n-2", "3n-1"]]}, {"op": "flip"}]},
  "C*D":         {"source": {"id": "A2n-1*Dn+1", "n": "n"},
                  "steps": [{"op": "fold", "reflect": [0, "2n-2"]}]},
  "B*D":         {"source": {"id": "A2n-1*Dn+1", "n": "n"},
                  "steps": [{"op": "fold", "reflect": [0, "2n-2"]}, {"op": "flip"}]},
  "B*C":         {"source": {"id": "A2n-1*Dn+1", "n": "n"},
                  "steps": [{"op": "fold", "reflect": [0, "2n-2"]}, {"op": "fold", "cycles": [["2n-1", "2n"]]}]},
  "F4*1E6":      {"source": {"id": "E6*E6"},
                  "steps": [{"op": "fold", "cycles": [[0, 4], [1, 3]]}]},
  "F4*2E6":      {"source": {"id": "E6*E6"},
                  "steps": [{"op": "fold", "cycles": [[0, 4], [1, 3]]}, {"op": "flip"}]},
  "F4*F4":       {"source": {"id": "E6*E6"},
                  "steps": [{"op": "fold", "cycles": [[0, 4], [1, 3]]}, {"op": "fold", "cycles": [[4, 8], [5, 7]]}]}
}
)json");
    return data;
}

namespace detail {

// "3n-2", "n", "n+1", "2n", or a plain integer
inline int eval_linear(const nlohmann::json& e, int n) {
    if (e.is_number_integer()) return e.get<int>();
    std::string s = e.get<std::string>();
    std::smatch mt;
    static const std::regex re(R"(^\s*(\d*)n\s*(?:([+-])\s*(\d+))?\s*$)");
    static const std::regex num(R"(^\s*-?\d+\s*$)");
    if (std::regex_match(s, num)) return std::stoi(s);
    if (!std::regex_match(s, mt, re)) throw Error("bad index expression '" + s + "'");
    int a = mt[1].length() ? std::stoi(mt[1]) : 1;
    int b = mt[3].length() ? std::stoi(mt[3]) : 0;
    if (mt[2] == "-") b = -b;
    return a * n + b;
}

// "D{n+1}" -> "D5"
inline std::string eval_variant(const std::string& v, int n) {
    auto l = v.find('{');
    if (l == std::string::npos) return v;
    auto r = v.find('}', l);
    return v.substr(0, l) + std::to_string(eval_linear(v.substr(l + 1, r - l - 1), n)) + v.substr(r + 1);
}

// automorphism of a template whose fold is the target type, on template indices
inline std::pair<DynkinType, std::vector<std::vector<int>>> unfolding(const DynkinType& t) {
    int n = t.rank;
    switch (t.family) {
        case Family::B: return {{Family::D, n + 1}, {{0, 1}}};
        case Family::C: {
            std::vector<std::vector<int>> cyc;
            for (int k = 0; k + 1 < n; ++k) cyc.push_back({k, 2 * n - 2 - k});
            return {{Family::A, 2 * n - 1}, cyc};
        }
        case Family::F: return {{Family::E, 6}, {{0, 5}, {2, 4}}};
        case Family::G: return {{Family::D, 4}, {{0, 1, 3}}};
        default: return {t, {}};
    }
}

inline std::vector<int> cycles_perm(int n, const std::vector<std::vector<int>>& cyc) {
    std::vector<std::vector<int>> c(cyc.begin(), cyc.end());
    return perm_from_cycles(n, c);
}

}  // namespace detail

inline Derivation derivation_from_json(const nlohmann::json& j, int n) {
    Derivation d;
    auto& s = j.at("source");
    d.source.id = s.at("id").get<std::string>();
    if (s.contains("n")) d.source.n = detail::eval_linear(s["n"], n);
    if (s.contains("m")) d.source.m = detail::eval_linear(s["m"], n);
    if (s.contains("variant")) d.source.variant = detail::eval_variant(s["variant"].get<std::string>(), n);
    int size = spec_rank(d.source);
    for (auto& st : j.at("steps")) {
        DerivationStep step;
        std::string op = st.at("op");
        if (op == "flip") {
            step.op = DerivationStep::Op::flip;
        } else if (op == "fold") {
            step.op = DerivationStep::Op::fold;
            if (st.contains("perm")) {
                step.perm = st["perm"].get<std::vector<int>>();
            } else {
                std::vector<std::vector<int>> cyc;
                if (st.contains("cycles"))
                    for (auto& c : st["cycles"]) {
                        std::vector<int> cc;
                        for (auto& e : c) cc.push_back(detail::eval_linear(e, n));
                        cyc.push_back(cc);
                    }
                if (st.contains("reflect")) {
                    int lo = detail::eval_linear(st["reflect"][0], n), hi = detail::eval_linear(st["reflect"][1], n);
                    for (; lo < hi; ++lo, --hi) cyc.push_back({lo, hi});
                }
                step.perm = perm_from_cycles(size, cyc);
            }
            size = static_cast<int>(perm_orbits(step.perm).size());
        } else {
            throw Error("unknown derivation op '" + op + "'");
        }
        d.steps.push_back(std::move(step));
    }
    return d;
}

inline nlohmann::json to_json(const FamilySpec& s) {
    nlohmann::json j{{"id", s.id}};
    if (s.n) j["n"] = s.n;
    if (s.m) j["m"] = s.m;
    if (!s.variant.empty()) j["variant"] = s.variant;
    return j;
}

inline nlohmann::json to_json(const Derivation& d) {
    nlohmann::json steps = nlohmann::json::array();
    for (auto& s : d.steps) {
        if (s.op == DerivationStep::Op::flip)
            steps.push_back({{"op", "flip"}});
        else
            steps.push_back({{"op", "fold"}, {"perm", s.perm}});
    }
    return {{"source", to_json(d.source)}, {"steps", steps}};
}

inline Derivation derive_from_ade(const FamilySpec& target0) {
    auto target = normalize_spec(target0);
    check_spec(target);
    if (target.id == "tensor") {
        auto [x, y] = parse_type_pair(target.variant);
        auto [ux, cx] = detail::unfolding(x);
        auto [uy, cy] = detail::unfolding(y);
        Derivation d{{"tensor", 0, 0, ux.name() + "," + uy.name()}, {}};
        if (!cx.empty()) {
            auto sx = detail::cycles_perm(ux.rank, cx);
            std::vector<int> p(ux.rank * uy.rank);
            for (int dd = 0; dd < uy.rank; ++dd)
                for (int g = 0; g < ux.rank; ++g) p[dd * ux.rank + g] = dd * ux.rank + sx[g];
            d.steps.push_back({DerivationStep::Op::fold, p});
        }
        if (!cy.empty()) {
            auto sy = detail::cycles_perm(uy.rank, cy);
            std::vector<int> p(x.rank * uy.rank);
            for (int dd = 0; dd < uy.rank; ++dd)
                for (int g = 0; g < x.rank; ++g) p[dd * x.rank + g] = sy[dd] * x.rank + g;
            d.steps.push_back({DerivationStep::Op::fold, p});
        }
        return d;
    }
    if (target.id == "twist") {
        auto x = parse_type(target.variant);
        auto [ux, cx] = detail::unfolding(x);
        Derivation d{{"twist", 0, 0, ux.name()}, {}};
        if (!cx.empty()) {
            auto sx = detail::cycles_perm(ux.rank, cx);
            std::vector<int> p(2 * ux.rank);
            for (int g = 0; g < ux.rank; ++g) {
                p[g] = sx[g];
                p[ux.rank + g] = ux.rank + sx[g];
            }
            d.steps.push_back({DerivationStep::Op::fold, p});
        }
        return d;
    }
    const auto& info = family_info(target.id);
    if (info.group == "ADE") return {target, {}};
    auto& scripts = derivation_scripts();
    if (!scripts.contains(target.id)) throw NoDerivationRecorded("no derivation recorded for " + target.id);
    return derivation_from_json(scripts[target.id], target.n);
}

inline DynkinBiagram replay(const Derivation& d) {
    auto bg = build(d.source);
    for (auto& s : d.steps) bg = s.op == DerivationStep::Op::flip ? global_flip(bg) : fold(bg, s.perm);
    return bg;
}

}  // namespace zamolod
