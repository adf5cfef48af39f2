#include <doctest.h>

#include "brieskorn/invariants.hpp"
#include "brieskorn/sweep.hpp"
#include "brieskorn/table.hpp"

using namespace brieskorn;

TEST_CASE("casson invariant") {
    CHECK(casson(2, 3, 5) == -1);
    CHECK(casson(2, 3, 7) == -1);
    CHECK(casson(2, 3, 11) == -2);
    CHECK(casson(3, 4, 5) == -2);
}

TEST_CASE("d-invariant of the reversed orientation") {
    CHECK(d_invariant_minus(2, 3, 5) == -2); // delta(Sigma(2,3,5)) = 1
    CHECK(d_invariant_minus(2, 3, 7) == 0);
    CHECK(d_invariant_minus(2, 3, 11) == -2);
}

TEST_CASE("reduced ranks, free quotients included") {
    CHECK(hf_red_rank(Exponents::of({2, 5, 7})) == 2);
    CHECK(hf_red_rank(Exponents::of({2, 5, 7}), 3) == 0);
    CHECK(hf_red_rank(Exponents::of({2, 5, 9}), 17) == 1);
    CHECK(hf_red_rank(Exponents::of({2, 3, 11}), 5) == 1);
}

TEST_CASE("r = 4 pipeline against the independent oracle") {
    // Values computed by a from-scratch implementation (brute-force Seifert
    // data, ceiling-formula tau, extremum-sum rank), frozen here.
    const Exponents e = Exponents::of({2, 3, 5, 7});
    CHECK(bound_N_i64(e) == 173);
    CHECK(hf_red_rank(e) == 13);
    CHECK(min_tau(tau_profile(brieskorn_seifert_data(e), 1)) == -18);
    CHECK(hf_red_rank(e, 11) == 2);
    CHECK(hf_red_rank(e, 13) == 2);
    CHECK(hf_red_rank(e, 179) == 0); // past N, the quotient has no reduced part

    CHECK(hf_red_rank(Exponents::of({2, 3, 5, 11})) == 21);
    CHECK(hf_red_rank(Exponents::of({3, 4, 5, 7})) == 30);

    const SeifertData sd = brieskorn_seifert_data(e);
    CHECK(sd.e0 == -2);
    CHECK(sd.b == std::vector<i64>{1, 2, 2, 3});
}

TEST_CASE("rank differences for free actions") {
    CHECK(delta_inf_minus_delta_free(Exponents::of({2, 3, 11}), 5) == 0);
    CHECK(delta_inf_minus_delta_free(Exponents::of({2, 3, 13}), 5) == 2);
    CHECK(delta_inf_minus_delta_free(Exponents::of({2, 3, 7}), 11) == 1);
}

TEST_CASE("absolute delta_inf in the free case") {
    CHECK(delta_inf_free_absolute(2, 3, 7, 11) == 1);
    CHECK(delta_inf_free_absolute(2, 3, 5, 7) == 1);
    CHECK(delta_inf_free_absolute(2, 3, 5, 11) == 1);
    CHECK(delta_inf_free_absolute(2, 3, 11, 5) == 1);
}

TEST_CASE("delta_inf equals -lambda for large primes (spot)") {
    for (const auto& t : {std::array<i64, 3>{2, 3, 7}, {2, 3, 13}, {2, 5, 9}, {3, 4, 7}}) {
        const Exponents e = Exponents::of({t[0], t[1], t[2]});
        const i64 N = bound_N_i64(e);
        for (i64 p = N + 1;; ++p) {
            if (!is_prime(p) || t[0] % p == 0 || t[1] % p == 0 || t[2] % p == 0) continue;
            CHECK(delta_inf_free_absolute(t[0], t[1], t[2], p) == -casson(t[0], t[1], t[2]));
            break;
        }
    }
}

TEST_CASE("branched bounds") {
    CHECK(branched_bound(branched_pair(Exponents::of({2, 3, 35}), 5)) == 0);
    CHECK(branched_bound(branched_pair(Exponents::of({2, 3, 35}), 7)) == 5);
    CHECK(hf_red_rank(Exponents::of({2, 3, 35})) == 5);
}

TEST_CASE("equivariant signature") {
    CHECK(sigma_equivariant(2, 3, 5) == -8);
    CHECK(sigma_equivariant(2, 3, 7) == -8);
    CHECK(sigma_equivariant(3, 4, 5) == -16);
    CHECK_THROWS_WITH_AS(sigma_equivariant(3, 4, 9), doctest::Contains("NotPrime"), Error);
}

TEST_CASE("torus knot reports") {
    TorusKnotReport rep = torus_knot_report(2, 3, 7);
    CHECK(rep.kappa == 1);
    CHECK(rep.j_inv == 1);
    CHECK(rep.sigma_c == -8);
    CHECK(rep.theta == Rational(1));

    rep = torus_knot_report(3, 4, 5);
    CHECK(rep.theta == Rational(3));

    rep = torus_knot_report(4, 5, 3);
    CHECK(rep.theta == Rational(6));

    // c = 2 doubles the j invariant.
    rep = torus_knot_report(3, 5, 2);
    CHECK(rep.kappa == 0);
    CHECK(rep.j_inv == 0);
    CHECK(rep.theta == Rational(4));

    CHECK_THROWS_WITH_AS(torus_knot_report(2, 4, 3), doctest::Contains("NotPairwiseCoprime"), Error);
    CHECK_THROWS_WITH_AS(torus_knot_report(2, 3, 3), doctest::Contains("PrimeDividesProduct"), Error);
    CHECK_THROWS_WITH_AS(torus_knot_report(2, 3, 9), doctest::Contains("NotPrime"), Error);
}

TEST_CASE("two routes to kappa agree") {
    CHECK(j_prime_crosscheck(2, 3, 7));
    CHECK(j_prime_crosscheck(2, 3, 13));
    CHECK(j_prime_crosscheck(2, 3, 5)); // vacuous: no reduced part
    CHECK(j_prime_crosscheck(3, 4, 7));
    CHECK(j_prime_crosscheck(2, 7, 15));
}

TEST_CASE("invariant reports") {
    InvariantReport rep = invariant_report(Exponents::of({2, 3, 7}));
    CHECK(rep.N == zint_of(1));
    CHECK(rep.kappa == 1);
    CHECK(rep.casson_lambda == -1);
    CHECK(rep.d_minus == 0);
    CHECK(rep.delta_sigma == 0);
    CHECK(rep.hf_red_rank == 1);
    CHECK(rep.ell_plus == 0);

    rep = invariant_report(Exponents::of({2, 3, 5}));
    CHECK(rep.delta_sigma == 1);
    CHECK(rep.hf_red_rank == 0);
    CHECK(!rep.ell_plus.has_value());

    // r >= 4: ranks only, no absolute invariants.
    rep = invariant_report(Exponents::of({2, 3, 5, 7}));
    CHECK(!rep.kappa.has_value());
    CHECK(!rep.casson_lambda.has_value());
    CHECK(!rep.d_minus.has_value());
    CHECK(rep.hf_red_rank >= 0);
    CHECK(rep.min_tau <= 0);
}

TEST_CASE("kap integrality and rank identity (sample)") {
    for (const auto& t : coprime_triples(15000)) {
        const i64 k = kappa(t[0], t[1], t[2]);
        const i128 num = 4 * i128(k) - i128(t[0] - 1) * (t[1] - 1) * (t[2] - 1);
        REQUIRE(num % 8 == 0);
        const i64 lambda = static_cast<i64>(num / 8);
        const TauProfile tp = tau_profile(brieskorn_seifert_data(Exponents::of({t[0], t[1], t[2]})), 1);
        const i64 delta_sigma = -(k + lambda + min_tau(tp)); // -d(-Y)/2
        const i64 rank = reduced_rank(tower_decomposition(build_root(tp)));
        REQUIRE(rank == -delta_sigma - lambda);
    }
}

TEST_CASE("reference table rows recompute") {
    for (const TableRow& row : reference_table()) {
        const Exponents e = Exponents::of({row.a[0], row.a[1], row.a[2]});
        CHECK(bound_N_i64(e) == row.N);
        CHECK(hf_red_rank(e) == row.rank);
        for (const auto& [p, rank] : row.quotient_ranks) CHECK(quotient_rank_any(e, p) == rank);
    }
}

TEST_CASE("sweep engine agrees with the public pipeline") {
    TripleScan ts;
    for (const auto& t : coprime_triples(2500)) {
        ts.analyze(t[0], t[1], t[2], nullptr);
        const Exponents e = Exponents::of({t[0], t[1], t[2]});
        REQUIRE(ts.rank1 == hf_red_rank(e));
        REQUIRE(ts.kappa == kappa(t[0], t[1], t[2]));
        if (ts.N >= 0) {
            const TauProfile tp = tau_profile(brieskorn_seifert_data(e), 1);
            REQUIRE(ts.min_tau == min_tau(tp));
            const GradedRoot gr = build_root(tp);
            REQUIRE(ts.ext_min == gr.minima);
            REQUIRE(ts.ext_max == gr.maxima);
            const UModule mod = tower_decomposition(gr);
            if (!mod.finite.empty()) {
                // reduced part of an r = 3 profile lives in degrees [2*min tau, 0]
                REQUIRE(top_reduced_degree_rel(mod) <= 0);
                for (const Tower& tw : mod.finite) REQUIRE(tw.bottom >= mod.infinite_bottom);
            }
        }
        for (i64 p : {5LL, 7LL, 11LL}) {
            if (t[0] % p == 0 || t[1] % p == 0 || t[2] % p == 0) continue;
            REQUIRE(ts.quotient_rank(p) == hf_red_rank(e, p));
        }
    }
}
