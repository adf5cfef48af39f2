#include <doctest.h>

#include <algorithm>
#include <random>

#include "brieskorn/graded_root.hpp"
#include "brieskorn/invariants.hpp"

using namespace brieskorn;

TEST_CASE("root extraction from tau sequences") {
    GradedRoot gr = build_root_from_values({0, 1, 0});
    CHECK(gr.minima == std::vector<i64>{0, 0});
    CHECK(gr.maxima == std::vector<i64>{1});

    gr = build_root_from_values({0, 1, 0, 0, 0, 0, 0, 1, 0});
    CHECK(gr.minima == std::vector<i64>{0, 0, 0});
    CHECK(gr.maxima == std::vector<i64>{1, 1});
    CHECK(gr.min_pos == std::vector<i64>{0, 2, 8});

    gr = build_root_from_values({0});
    CHECK(gr.minima == std::vector<i64>{0});
    CHECK(gr.maxima.empty());

    // Ascending tail: the final plateau is not a leaf.
    gr = build_root_from_values({0, 1, 1});
    CHECK(gr.minima == std::vector<i64>{0});
    CHECK(gr.maxima.empty());

    // Descending prefix: the initial run is not a leaf either.
    gr = build_root_from_values({1, 0, 1, 0});
    CHECK(gr.minima == std::vector<i64>{0, 0});
    CHECK(gr.maxima == std::vector<i64>{1});
}

TEST_CASE("tower decomposition on the small spheres") {
    const Exponents e237 = Exponents::of({2, 3, 7});
    UModule m = tower_decomposition(build_root(tau_profile(brieskorn_seifert_data(e237), 1)));
    CHECK(m.infinite_bottom == 0);
    REQUIRE(m.finite.size() == 1);
    CHECK(m.finite[0] == Tower{0, 1});

    const Exponents e2313 = Exponents::of({2, 3, 13});
    m = tower_decomposition(build_root(tau_profile(brieskorn_seifert_data(e2313), 1)));
    REQUIRE(m.finite.size() == 2);
    CHECK(m.finite[0] == Tower{0, 1});
    CHECK(m.finite[1] == Tower{0, 1});
    CHECK(reduced_rank(m) == 2);

    const Exponents e235 = Exponents::of({2, 3, 5});
    m = tower_decomposition(build_root(tau_profile(brieskorn_seifert_data(e235), 1)));
    CHECK(m.finite.empty());
    CHECK(reduced_rank(m) == 0);
}

TEST_CASE("deep valley decomposition") {
    const GradedRoot gr = build_root_from_values({0, 1, -1, 1, 0});
    CHECK(gr.minima == std::vector<i64>{0, -1, 0});
    const UModule m = tower_decomposition(gr);
    CHECK(m.infinite_bottom == -2);
    REQUIRE(m.finite.size() == 2);
    CHECK(m.finite[0] == Tower{0, 1});
    CHECK(m.finite[1] == Tower{0, 1});
    CHECK(reduced_rank(m) == 2);
    CHECK(reduced_rank_from_extrema(gr.minima, gr.maxima) == 2);
}

TEST_CASE("top reduced degree and the U-image test") {
    UModule m;
    m.infinite_bottom = 0;
    m.finite = {Tower{0, 1}};
    CHECK(top_reduced_degree_rel(m) == 0);
    CHECK(u_image_top_degree_check(m));

    m.finite = {Tower{-4, 2}, Tower{0, 1}};
    CHECK(top_reduced_degree_rel(m) == 0);
    CHECK(u_image_top_degree_check(m));

    m.finite = {Tower{-2, 2}};
    CHECK(top_reduced_degree_rel(m) == 0);
    CHECK(!u_image_top_degree_check(m));

    m.finite.clear();
    CHECK_THROWS_WITH_AS(top_reduced_degree_rel(m), doctest::Contains("EmptyReduced"), Error);
    CHECK_THROWS_WITH_AS(u_image_top_degree_check(m), doctest::Contains("EmptyReduced"), Error);
}

TEST_CASE("per-degree ranks match the vertex counts") {
    const GradedRoot gr = build_root_from_values({0, 1, -1, 2, 0, 1, 0});
    const UModule m = tower_decomposition(gr);
    for (i64 level = -3; level <= 4; ++level)
        REQUIRE(module_rank_at(m, level) == root_vertex_count(gr, level));
}

TEST_CASE("tie-break independence on random profiles") {
    std::mt19937_64 rng(7041);
    for (int iter = 0; iter < 600; ++iter) {
        // Random walk with steps in {-1, 0, 1}; any such profile is a valid
        // input for the root construction.
        const int len = 2 + static_cast<int>(rng() % 60);
        std::vector<i64> tau{0};
        for (int i = 1; i < len; ++i)
            tau.push_back(tau.back() + static_cast<i64>(rng() % 3) - 1);

        const GradedRoot gr = build_root_from_values(tau);
        const UModule left = tower_decomposition(gr, TieBreak::leftmost);
        const UModule right = tower_decomposition(gr, TieBreak::rightmost);
        REQUIRE(left.infinite_bottom == right.infinite_bottom);
        REQUIRE(left.finite == right.finite);
        REQUIRE(reduced_rank(left) == reduced_rank_from_extrema(gr.minima, gr.maxima));
        for (const Tower& tw : left.finite) {
            REQUIRE(tw.length >= 1);
            REQUIRE(tw.bottom >= left.infinite_bottom);
        }

        i64 lo = *std::min_element(gr.minima.begin(), gr.minima.end());
        i64 hi = lo;
        for (i64 v : gr.maxima) hi = std::max(hi, v);
        for (i64 level = lo - 1; level <= hi + 1; ++level)
            REQUIRE(module_rank_at(left, level) == root_vertex_count(gr, level));
    }
}

TEST_CASE("quotient profiles never gain rank (sample)") {
    for (const auto& t : {std::array<i64, 3>{2, 3, 13}, {2, 3, 17}, {2, 5, 9}, {3, 4, 7}, {2, 7, 15}}) {
        const Exponents e = Exponents::of({t[0], t[1], t[2]});
        const i64 r1 = hf_red_rank(e, 1);
        for (i64 p : {5LL, 7LL, 11LL, 13LL}) {
            if (t[0] % p == 0 || t[1] % p == 0 || t[2] % p == 0) continue;
            REQUIRE(hf_red_rank(e, p) <= r1);
        }
    }
}
