#pragma once

#include "biagram.hpp"
#include "exchange.hpp"

#include <json.hpp>

#include <fstream>
#include <regex>

namespace zamolod {

using nlohmann::json;

struct IoError : Error {
    using Error::Error;
};

inline json eps_to_json(const std::vector<Color>& eps) {
    json a = json::array();
    for (auto c : eps) a.push_back(std::string(1, color_char(c)));
    return a;
}

inline std::vector<Color> eps_from_json(const json& j) {
    std::vector<Color> eps;
    for (auto& x : j) {
        std::string s = x.get<std::string>();
        if (s == "w" || s == "white")
            eps.push_back(Color::white);
        else if (s == "b" || s == "black")
            eps.push_back(Color::black);
        else
            throw IoError("color must be \"w\" or \"b\", got \"" + s + "\"");
    }
    return eps;
}

inline json to_json(const ExchangeMatrix& m) {
    json b = json::array();
    for (auto& row : m.b) {
        json r = json::array();
        for (auto& x : row) {
            if (x.fits_slong_p())
                r.push_back(x.get_si());
            else
                r.push_back(x.get_str());
        }
        b.push_back(r);
    }
    return {{"n", m.n}, {"b", b}, {"eps", eps_to_json(m.eps)}};
}

inline ExchangeMatrix exchange_from_json(const json& j) {
    std::size_t n = j.at("n").get<std::size_t>();
    ZMat b;
    for (auto& row : j.at("b")) {
        std::vector<Int> r;
        for (auto& x : row) r.push_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<long>()));
        b.push_back(std::move(r));
    }
    if (b.size() != n) throw IoError("matrix size does not match n");
    std::vector<Color> eps = j.contains("eps") ? eps_from_json(j["eps"]) : infer_bipartition(b);
    return checked_exchange(std::move(b), std::move(eps));
}

inline json to_json(const DynkinBiagram& bg) {
    return {{"n", bg.n}, {"gamma", bg.gamma}, {"delta", bg.delta}, {"eps", eps_to_json(bg.eps)}};
}

inline DynkinBiagram biagram_from_json(const json& j) {
    std::size_t n = j.at("n").get<std::size_t>();
    auto g = j.at("gamma").get<IMat>();
    auto d = j.at("delta").get<IMat>();
    if (g.size() != n || d.size() != n) throw IoError("matrix size does not match n");
    if (j.contains("eps")) return make_biagram(std::move(g), std::move(d), eps_from_json(j["eps"]));
    return make_biagram(std::move(g), std::move(d));
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

// accepts a biagram file or an exchange-matrix file
inline DynkinBiagram read_biagram(const std::string& path) {
    auto j = read_json_file(path);
    if (j.contains("gamma")) return biagram_from_json(j);
    if (j.contains("b")) return from_exchange_matrix(exchange_from_json(j));
    throw IoError(path + ": expected \"gamma\"/\"delta\" or \"b\"");
}

// "2,0,-9/10,1,-1,4" or "e5" (1-based basis vector)
inline std::vector<Rat> parse_lambda(const std::string& s, std::size_t n) {
    std::smatch mt;
    static const std::regex basis(R"(^\s*e(\d+)\s*$)");
    if (std::regex_match(s, mt, basis)) {
        std::size_t k = std::stoul(mt[1]);
        if (k < 1 || k > n) throw IoError("basis index out of range in '" + s + "'");
        std::vector<Rat> l(n, Rat(0));
        l[k - 1] = 1;
        return l;
    }
    std::vector<Rat> l;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) l.push_back(parse_rational(tok));
    if (l.size() != n)
        throw IoError("labeling has " + std::to_string(l.size()) + " entries, expected " + std::to_string(n));
    return l;
}

}  // namespace zamolod
