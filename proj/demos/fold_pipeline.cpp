// Fold D5 box A7 down to B4 box C4 and check the result with the exact T-system.
#include <zamolod/zamolod.hpp>

#include <iostream>

int main() {
    using namespace zamolod;
    auto source = build({"D5boxA7"});
    auto folded = fold(source, d5a7_fold_perm());
    std::cout << "folded to " << folded.n << " vertices, admissible " << is_admissible(folded) << "\n";
    std::cout << "isomorphic to B4boxC4: " << is_isomorphic(folded, build({"B4boxC4"}), EpsMode::exact) << "\n";

    auto d = derive_from_ade({"B3bowtie1G2"});
    std::cout << "derivation of B3bowtie1G2:\n" << to_json(d).dump(2) << "\n";
    // the replay lands on the opposite bipartition, so colors are ignored here
    std::cout << "replay matches: " << is_isomorphic(replay(d), build({"B3bowtie1G2"}), EpsMode::ignore) << "\n";

    auto [hg, hd] = coxeter_numbers(folded);
    std::cout << "h_gamma " << hg << ", h_delta " << hd << ", tropical period of e1 "
              << *trop_period(folded, parse_lambda("e1", folded.n), hg + hd) << "\n";
}
