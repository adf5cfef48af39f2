#include <doctest.h>

#include "brieskorn/delta_tau.hpp"
#include "brieskorn/sweep.hpp"

using namespace brieskorn;

namespace {

SeifertData data(std::initializer_list<i64> a) { return brieskorn_seifert_data(Exponents::of(a)); }

} // namespace

TEST_CASE("delta values") {
    const SeifertData sd = data({2, 3, 7});
    CHECK(delta_at(sd, 1, 0) == 1);
    CHECK(delta_at(sd, 1, 1) == -1);

    const SeifertData sd2311 = data({2, 3, 11});
    CHECK(delta_at(sd2311, 5, 1) == -1);
    CHECK(delta_at(sd2311, 5, 1) == delta_at(sd2311, 1, 5));
}

TEST_CASE("delta via the semigroup rule") {
    CHECK(delta_via_semigroup(2, 3, 13, 6) == 1);
    CHECK(delta_via_semigroup(2, 3, 13, 1) == -1);
    CHECK(delta_via_semigroup(2, 3, 13, 3) == 0);
    CHECK_THROWS_WITH_AS(delta_via_semigroup(2, 3, 13, 8), doctest::Contains("OutOfRange"), Error);
    CHECK_THROWS_AS(delta_via_semigroup(2, 3, 5, 0), Error); // empty domain
}

TEST_CASE("tau profiles") {
    TauProfile tp = tau_profile(data({2, 3, 7}), 1);
    CHECK(tp.tau == std::vector<i64>{0, 1, 0});
    CHECK(tp.delta == std::vector<int>{1, -1});

    tp = tau_profile(data({2, 3, 13}), 1);
    CHECK(tp.tau == std::vector<i64>{0, 1, 0, 0, 0, 0, 0, 1, 0});

    tp = tau_profile(data({2, 3, 13}), 5);
    CHECK(tp.tau == std::vector<i64>{0, 1, 1});

    tp = tau_profile(data({2, 3, 5}), 1);
    CHECK(tp.tau == std::vector<i64>{0});
    CHECK(tp.domain_end == 0);
    CHECK(tp.delta.empty());
}

TEST_CASE("delta at very large arguments stays exact") {
    const SeifertData sd = data({2, 3, 7});
    // Independent big-integer evaluation of 1 - n*p*e0 - sum ceil(n*p*b/a).
    auto oracle = [&](i64 p, i64 n) {
        Zint np = zint_of(n) * zint_of(p);
        Zint acc = 1 - np * zint_of(sd.e0);
        for (size_t j = 0; j < sd.b.size(); ++j) {
            Zint num = np * zint_of(sd.b[j]) + zint_of(sd.a.sorted()[j] - 1);
            acc -= num / zint_of(sd.a.sorted()[j]);
        }
        return acc;
    };
    for (i64 n : {1000000007LL, (1LL << 62) - 3, 3000000000000000000LL}) {
        CHECK(zint_of(delta_at(sd, 1, n)) == oracle(1, n));
        CHECK(zint_of(delta_at(sd, 13, n)) == oracle(13, n));
    }
}

TEST_CASE("profile scale validation") {
    const SeifertData sd = data({2, 3, 7});
    CHECK_THROWS_WITH_AS(tau_profile(sd, 4), doctest::Contains("NotPrime"), Error);
    CHECK_THROWS_WITH_AS(tau_profile(sd, 7), doctest::Contains("PrimeDividesExponent"), Error);
    CHECK_THROWS_AS(delta_at(sd, 1, -1), Error);
}

TEST_CASE("min tau") {
    CHECK(min_tau(tau_profile(data({2, 3, 7}), 1)) == 0);
    CHECK(min_tau(tau_profile(data({2, 3, 5}), 1)) == 0);
    CHECK(min_tau(tau_profile(data({2, 7, 13}), 1)) <= 0);
    CHECK(min_tau(tau_profile(data({3, 4, 7}), 1)) == -1);
}

TEST_CASE("tau endpoint values for r = 3") {
    for (const auto& t : coprime_triples(4000)) {
        const TauProfile tp = tau_profile(data({t[0], t[1], t[2]}), 1);
        if (tp.Np < 1) continue;
        const i64 N = tp.Np;
        REQUIRE((tp.tau[0] == 0 && tp.tau[1] == 1 && tp.tau[N] == 1 && tp.tau[N + 1] == 0));
    }
}

TEST_CASE("ceiling formula agrees with the semigroup rule (abc <= 20000)") {
    for (const auto& t : coprime_triples(20000)) {
        const Semigroup g = build_membership(Exponents::of({t[0], t[1], t[2]}));
        if (g.N < 0) continue;
        const TauProfile tp = tau_profile(data({t[0], t[1], t[2]}), 1);
        i64 bad = 0;
        for (i64 n = 0; n <= g.N; ++n) bad += tp.delta[n] != delta_via_semigroup(g, n);
        REQUIRE(bad == 0);
    }
}

TEST_CASE("symmetry, range, and scaling identification (sample)") {
    for (const auto& t : coprime_triples(8000)) {
        const SeifertData sd = data({t[0], t[1], t[2]});
        const TauProfile tp = tau_profile(sd, 1);
        const i64 N = tp.Np;
        i64 bad = 0;
        for (i64 n = 0; n + 1 <= N + 1; ++n) bad += tp.tau[N + 1 - n] != tp.tau[n];
        for (int d : tp.delta) bad += d < -1 || d > 1;
        for (i64 p : {5LL, 7LL, 11LL}) {
            if (t[0] % p == 0 || t[1] % p == 0 || t[2] % p == 0) continue;
            const TauProfile tq = tau_profile(sd, p);
            for (i64 n = 0; n <= tq.Np; ++n) bad += tq.delta[n] != tp.delta[n * p];
            // past the cutoff the scaled delta stays nonnegative
            for (i64 n = tq.Np + 1; n <= 3 * tq.Np; ++n) bad += delta_at(sd, p, n) < 0;
        }
        REQUIRE(bad == 0);
    }
}

TEST_CASE("maxima classification") {
    MaximaClassification mc = classify_maxima(tau_profile(data({2, 3, 7}), 1));
    CHECK(mc.max_value == 1);
    CHECK(mc.all_trivial);

    // Both maxima of (2,3,13) sit at the ends of the domain, so the scan
    // reports them trivial.
    mc = classify_maxima(tau_profile(data({2, 3, 13}), 1));
    CHECK(mc.all_trivial);
    CHECK(!mc.witness.has_value());

    mc = classify_maxima(tau_profile(data({3, 4, 13}), 1));
    CHECK(mc.all_trivial);

    CHECK_THROWS_WITH_AS(classify_maxima(tau_profile(data({2, 3, 13}), 5)),
                         doctest::Contains("UnsupportedCase"), Error);
    CHECK_THROWS_WITH_AS(classify_maxima(tau_profile(data({2, 3, 5}), 1)),
                         doctest::Contains("UnsupportedCase"), Error);
    CHECK_THROWS_AS(classify_maxima(tau_profile(data({2, 3, 5, 7}), 1)), Error);
}

TEST_CASE("trivial maxima hold for every non-(2,3,c) triple (sample)") {
    for (const auto& t : coprime_triples(8000)) {
        if (t[0] == 2 && t[1] == 3) continue;
        const MaximaClassification mc = classify_maxima(tau_profile(data({t[0], t[1], t[2]}), 1));
        REQUIRE(mc.max_value == 1);
        REQUIRE(mc.all_trivial);
    }
}
