#pragma once

#include <zamolod/zamolod.hpp>

#include <string>

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(ZAMOLOD_FIXTURES) + "/" + name + ".json"; }

inline zamolod::json fixture_json(const std::string& name) { return zamolod::read_json_file(fixture_path(name)); }

inline zamolod::DynkinBiagram fixture(const std::string& name) { return zamolod::read_biagram(fixture_path(name)); }

// 0-based witness pair stored with the figure
inline std::pair<int, int> fixture_witness(const std::string& name) {
    auto w = fixture_json(name).at("witness");
    return {w[0].get<int>(), w[1].get<int>()};
}

inline zamolod::DynkinBiagram worked_example() {
    return zamolod::make_biagram({{0, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 0, 0, 3}, {0, 0, 0, 1, 0}},
                                 {{0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 2}, {0, 3, 0, 0, 0}, {1, 0, 1, 0, 0}},
                                 {zamolod::Color::black, zamolod::Color::white, zamolod::Color::black,
                                  zamolod::Color::black, zamolod::Color::white});
}

inline std::vector<zamolod::Rat> rats(std::initializer_list<const char*> xs) {
    std::vector<zamolod::Rat> r;
    for (auto x : xs) r.push_back(zamolod::parse_rational(x));
    return r;
}

}  // namespace testing
