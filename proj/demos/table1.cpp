// Tropical evolution of B3 bowtie_1 G2 from e5, printed as rows t = 0..13.
#include <zamolod/zamolod.hpp>

#include <iomanip>
#include <iostream>

int main() {
    using namespace zamolod;
    auto bg = build({"B3bowtie1G2"});
    auto tr = trop_evolve(bg, parse_lambda("e5", bg.n), 13);
    for (auto& s : tr.states) {
        std::cout << std::setw(3) << s.t;
        for (auto& v : s.values) std::cout << std::setw(4) << (v ? rat_to_string(*v) : "");
        std::cout << "\n";
    }
    std::cout << "period " << *trop_period(bg, parse_lambda("e5", bg.n), 20) << "\n";
}
