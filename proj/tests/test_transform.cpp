#include "support.hpp"

#include <doctest.h>

using namespace zamolod;

namespace {

std::vector<FamilySpec> scripted_targets() {
    std::vector<FamilySpec> out;
    for (auto& [id, script] : derivation_scripts().items()) {
        const auto& f = family_info(id);
        if (!f.uses_n) {
            out.push_back({id, 0, 0, ""});
            continue;
        }
        for (int n = f.min_n; n <= 6; ++n) out.push_back({id, n, 0, ""});
    }
    return out;
}

// lambda constant on the orbits of perm
std::vector<Rat> symmetric_labeling(const std::vector<std::vector<int>>& orbits, std::size_t n, std::mt19937_64& rng) {
    auto base = random_labeling(orbits.size(), rng);
    std::vector<Rat> l(n);
    for (std::size_t o = 0; o < orbits.size(); ++o)
        for (int v : orbits[o]) l[v] = base[o];
    return l;
}

}  // namespace

TEST_CASE("validate_automorphism") {
    auto d5a7 = to_exchange_matrix(build({"D5boxA7"}));
    auto f = validate_automorphism(d5a7, d5a7_fold_perm());
    CHECK(f.orbits.size() == 8);

    std::vector<int> id(d5a7.n);
    std::iota(id.begin(), id.end(), 0);
    auto g = validate_automorphism(d5a7, id);
    CHECK(g.orbits.size() == d5a7.n);
    CHECK(fold(d5a7, g) == d5a7);

    auto a2 = to_exchange_matrix(tensor(parse_type("A2"), parse_type("A1")));
    try {
        validate_automorphism(a2, {1, 0});
        FAIL("swap of adjacent vertices accepted");
    } catch (const ViolatesCondition& e) {
        CHECK(e.condition == "iv");
    }

    auto ex = to_exchange_matrix(testing::fixture("b3_ltimes_d4"));
    CHECK_NOTHROW(validate_automorphism(ex, perm_from_cycles(7, {{3, 5, 6}})));
    // the two black B3 vertices carry different weights toward the middle one
    try {
        validate_automorphism(ex, perm_from_cycles(7, {{0, 2}}));
        FAIL("weight-changing swap accepted");
    } catch (const ViolatesCondition& e) {
        CHECK(e.condition == "iii");
    }
}

TEST_CASE("folding D5 box A7 gives B4 box C4") {
    auto folded = fold(build({"D5boxA7"}), d5a7_fold_perm());
    CHECK(folded == build({"B4boxC4"}));
    CHECK(is_isomorphic(folded, testing::fixture("b4_box_c4")));
    CHECK(is_admissible(folded));
}

TEST_CASE("two-step fold from D4 x D4 to B3 bowtie_1 G2") {
    auto src = twist(parse_type("D4"));
    auto mid = fold(src, perm_from_cycles(8, {{0, 1}}));
    CHECK(is_isomorphic(mid, testing::fixture("b3_ltimes_d4")));
    auto end = fold(mid, perm_from_cycles(7, {{3, 4, 6}}));
    CHECK(is_isomorphic(end, testing::worked_example()));
}

TEST_CASE("global flip") {
    auto b = testing::fixture("b3_ltimes_d4");
    CHECK(is_isomorphic(global_flip(b), build({"CltD", 3, 0, ""})));
    CHECK(global_flip(global_flip(b)) == b);
    for (auto& t : types_up_to(6)) {
        if (!t.simply_laced()) continue;
        auto bg = tensor(t, parse_type("A3"));
        CHECK(global_flip(bg) == bg);
    }
}

TEST_CASE("derivation scripts replay to the catalog") {
    for (auto& s : scripted_targets()) {
        CAPTURE(spec_name(s));
        auto d = derive_from_ade(s);
        auto src = build(d.source);
        CHECK(is_admissible(src));
        auto bg = replay(d);
        CHECK(is_admissible(bg));
        CHECK(is_isomorphic(bg, build(s)));
    }
}

TEST_CASE("recorded derivations") {
    auto b4c4 = derive_from_ade({"B4boxC4"});
    CHECK(b4c4.source.id == "D5boxA7");
    CHECK(b4c4.steps.size() == 1);

    auto c3d4 = derive_from_ade({"CltD", 3, 0, ""});
    CHECK(c3d4.source == FamilySpec{"twist", 0, 0, "D4"});
    REQUIRE(c3d4.steps.size() == 2);
    CHECK(c3d4.steps[0].op == DerivationStep::Op::fold);
    CHECK(c3d4.steps[1].op == DerivationStep::Op::flip);

    auto f4f4 = derive_from_ade({"F4*F4"});
    CHECK(f4f4.source.id == "E6*E6");
    REQUIRE(f4f4.steps.size() == 2);
    Derivation first{f4f4.source, {f4f4.steps[0]}};
    CHECK(is_isomorphic(replay(first), build({"F4*1E6"})));

    auto j = to_json(c3d4);
    CHECK(j["source"]["id"] == "twist");
    CHECK(j["steps"][1]["op"] == "flip");
    CHECK(j["steps"][0]["perm"].size() == 8);

    CHECK(derive_from_ade({"E6*E6"}).steps.empty());
    CHECK_THROWS_AS(derive_from_ade({"BA^{m-1}_n", 2, 2, ""}), NoDerivationRecorded);
}

TEST_CASE("tensor and twist derivations") {
    for (auto& a : types_up_to(4))
        for (auto& b : types_up_to(3)) {
            FamilySpec s{"tensor", 0, 0, a.name() + "," + b.name()};
            CAPTURE(spec_name(s));
            CHECK(is_isomorphic(replay(derive_from_ade(s)), build(s)));
        }
    for (auto& a : types_up_to(6)) {
        FamilySpec s{"twist", 0, 0, a.name()};
        CAPTURE(spec_name(s));
        CHECK(is_isomorphic(replay(derive_from_ade(s)), build(s)));
    }
}

TEST_CASE("folding commutes with tropical steps on symmetric labelings") {
    auto src = twist(parse_type("D4"));
    auto perm = perm_from_cycles(8, {{0, 1}});
    auto f = validate_automorphism(to_exchange_matrix(src), perm);
    auto folded = fold(src, perm);
    auto [hg, hd] = coxeter_numbers(src);
    int steps = 2 * (hg + hd) + 1;
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 20; ++trial) {
        auto l = symmetric_labeling(f.orbits, src.n, rng);
        std::vector<Rat> lf(f.orbits.size());
        for (std::size_t o = 0; o < f.orbits.size(); ++o) lf[o] = l[f.orbits[o][0]];
        auto big = trop_evolve(src, l, steps), small = trop_evolve(folded, lf, steps);
        for (int t = 0; t <= steps; ++t)
            for (std::size_t o = 0; o < f.orbits.size(); ++o)
                for (int v : f.orbits[o]) CHECK(big.states[t].values[v] == small.states[t].values[o]);
    }
}

TEST_CASE("flip covariance of tropical steps") {
    auto bg = testing::fixture("b3_ltimes_d4");
    auto flipped = global_flip(bg);
    auto c = find_symmetrizer(to_exchange_matrix(bg));
    REQUIRE(c);
    auto [hg, hd] = coxeter_numbers(bg);
    int steps = 2 * (hg + hd) + 1;
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        auto rho = random_labeling(bg.n, rng);
        std::vector<Rat> lam(bg.n);
        for (std::size_t i = 0; i < bg.n; ++i) lam[i] = rho[i] / (*c)[i];
        auto a = trop_evolve(bg, rho, steps), b = trop_evolve(flipped, lam, steps);
        for (int t = 0; t <= steps; ++t)
            for (std::size_t k = 0; k < bg.n; ++k) {
                REQUIRE(a.states[t].values[k].has_value() == b.states[t].values[k].has_value());
                if (a.states[t].values[k]) CHECK(*b.states[t].values[k] == *a.states[t].values[k] / (*c)[k]);
            }
        CHECK(trop_period(bg, rho, hg + hd) == trop_period(flipped, lam, hg + hd));
    }
}

TEST_CASE("folding preserves admissibility along every recorded step") {
    for (auto& s : scripted_targets()) {
        auto d = derive_from_ade(s);
        auto bg = build(d.source);
        for (auto& st : d.steps) {
            bg = st.op == DerivationStep::Op::flip ? global_flip(bg) : fold(bg, st.perm);
            CHECK(is_admissible(bg));
        }
    }
}
