#include "support.hpp"

#include <doctest.h>

using namespace zamolod;

namespace {

int edges(const IMat& a) {
    int e = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) e += a[i][j] > 0;
    return e;
}

DynkinBiagram induced(const DynkinBiagram& bg, int lo, int hi) {
    std::vector<int> idx;
    for (int k = lo; k < hi; ++k) idx.push_back(k);
    std::vector<Color> eps(bg.eps.begin() + lo, bg.eps.begin() + hi);
    return make_biagram(submatrix(bg.gamma, idx), submatrix(bg.delta, idx), eps);
}

}  // namespace

TEST_CASE("tensor products") {
    auto d4a4 = tensor(parse_type("D4"), parse_type("A4"));
    CHECK(d4a4.n == 16);
    CHECK(edges(d4a4.gamma) == 12);
    CHECK(edges(d4a4.delta) == 12);

    for (auto& t : types_up_to(6)) {
        auto bg = tensor(t, parse_type("A1"));
        CHECK(bg.gamma == template_matrix(t));
        CHECK(is_zero(bg.delta));
    }

    auto a2a3 = build({"A2xA3-tensor"});
    CHECK(is_admissible(a2a3));
    CHECK(coxeter_numbers(a2a3) == std::pair{3, 4});
    CHECK(coxeter_numbers(build({"A3xA2-tensor"})) == std::pair{4, 3});
}

TEST_CASE("twists") {
    for (auto& t : types_up_to(6)) {
        auto bg = twist(t);
        auto a = template_matrix(t);
        int r = t.rank;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                CHECK(bg.gamma[i][j] == a[i][j]);
                CHECK(bg.gamma[r + i][r + j] == a[i][j]);
                CHECK(bg.delta[i][r + j] == a[i][j]);
                CHECK(bg.delta[r + i][j] == a[i][j]);
                CHECK(bg.gamma[i][r + j] == 0);
                CHECK(bg.delta[i][j] == 0);
            }
        CHECK(is_admissible(bg));
    }
    CHECK(is_admissible(twist(parse_type("B2"))));
    CHECK(build({"D4xD4-twist"}) == twist(parse_type("D4")));
    CHECK_THROWS_AS(build({"D4xA3-twist"}), InvalidSpec);
}

TEST_CASE("the worked example is B3 bowtie_1 G2") {
    auto bg = build({"B3bowtie1G2"});
    auto ex = testing::worked_example();
    CHECK(bg.gamma == ex.gamma);
    CHECK(bg.delta == ex.delta);
    CHECK(is_isomorphic(bg, ex, EpsMode::exact));
}

TEST_CASE("builders agree with the hand-drawn fixtures") {
    for (auto name : {"a5_star_d4", "b3_star_a5", "b3_ltimes_d4", "b3_bowtie1_g2", "b3_bowtie2_g2",
                      "c3_bowtie1_g2", "c3_bowtie2_g2", "g2_ltimes1_d4", "g2_ltimes2_d4", "b4_box_c4"}) {
        CAPTURE(name);
        auto j = testing::fixture_json(name);
        auto fam = j.at("family");
        FamilySpec s{fam.at("id").get<std::string>(), fam.value("n", 0), 0, ""};
        auto fig = biagram_from_json(j);
        CHECK(is_admissible(fig));
        CHECK(is_isomorphic(build(s), fig));
    }
}

TEST_CASE("B4 box C4 is a fold of D5 box A7") {
    auto b = build({"B4boxC4"});
    CHECK(b == fold(build({"D5boxA7"}), d5a7_fold_perm()));
    CHECK(is_admissible(b));
}

TEST_CASE("chain members") {
    auto ba = build({"BA^{m-1}_n", 2, 2, ""});
    CHECK(is_admissible(ba));
    CHECK(is_connected(ba));
    CHECK_THROWS_AS(build({"BA^{m-1}_n", 1, 2, ""}), InvalidSpec);
    CHECK_THROWS_AS(build({"BbowtieC", 1, 0, ""}), InvalidSpec);
    CHECK_THROWS_AS(build({"nope"}), InvalidSpec);
}

TEST_CASE("deleting the last parallel factor stays in the catalog") {
    for (auto& f : family_table()) {
        if (f.group != "chain" || !f.uses_m) continue;
        int n = f.uses_n ? f.min_n : 0;
        for (int m = 3; f.rank(n, m) <= 16; ++m) {
            CAPTURE(f.id);
            CAPTURE(m);
            auto big = f.make(n, m), small = f.make(n, m - 1);
            int cut = static_cast<int>(big.n - small.n);
            bool ok = is_isomorphic(induced(big, 0, static_cast<int>(small.n)), small) ||
                      is_isomorphic(induced(big, cut, static_cast<int>(big.n)), small);
            CHECK(ok);
        }
    }
}

TEST_CASE("double bindings are self-dual up to isomorphism and admissible") {
    for (auto& f : family_table()) {
        if (f.group != "double binding") continue;
        int lo = f.uses_n ? f.min_n : 0, hi = f.uses_n ? 6 : 0;
        for (int n = lo; n <= hi; ++n) {
            CAPTURE(f.id);
            auto bg = f.make(n, 0);
            CHECK(is_admissible(dual(bg)));
        }
    }
}

TEST_CASE("every member up to rank 14 is admissible and recurrent") {
    int count = 0;
    for (auto& s : members_up_to_rank(14)) {
        CAPTURE(spec_name(s));
        auto bg = build(s);
        CHECK(static_cast<int>(bg.n) == spec_rank(s));
        CHECK(is_admissible(bg));
        CHECK(is_recurrent(to_exchange_matrix(bg)));
        CHECK(is_dynkin_biagram(bg));
        CHECK_NOTHROW(coxeter_numbers(bg));
        ++count;
    }
    CHECK(count > 300);
}

TEST_CASE("sweep bounds") {
    auto s53 = sweep_members(5, 3);
    CHECK(s53.size() >= 60);
    CHECK(s53.size() == 451);
    for (auto& s : s53) {
        CAPTURE(spec_name(s));
        auto bg = build(s);
        CHECK(is_admissible(bg));
        CHECK_NOTHROW(coxeter_numbers(bg));
    }
    auto s11 = sweep_members(1, 1);
    bool a1a1 = std::any_of(s11.begin(), s11.end(), [](const FamilySpec& s) { return s.id == "tensor" && s.variant == "A1,A1"; });
    CHECK(a1a1);
}
