#include "brieskorn/invariants.hpp"

namespace brieskorn {

namespace {

void require_triple(i64 a, i64 b, i64 c) { Exponents::of({a, b, c}); }

} // namespace

i64 casson(i64 a, i64 b, i64 c) {
    require_triple(a, b, c);
    const i64 k = kappa(a, b, c);
    const i128 num = 4 * i128(k) - i128(a - 1) * (b - 1) * (c - 1);
    if (num % 8 != 0)
        fail(Errc::integrality_violation, "4*kappa - (a-1)(b-1)(c-1) not divisible by 8");
    return static_cast<i64>(num / 8);
}

i64 d_invariant_minus(i64 a, i64 b, i64 c) {
    const i64 k = kappa(a, b, c);
    const i64 lam = casson(a, b, c);
    const TauProfile tp = tau_profile(brieskorn_seifert_data(Exponents::of({a, b, c})), 1);
    const i64 d = 2 * (k + lam + min_tau(tp));
    if (d % 2 != 0) fail(Errc::parity_violation, "d-invariant must be even");
    return d;
}

i64 hf_red_rank(const Exponents& a, i64 p) {
    const SeifertData sd = brieskorn_seifert_data(a);
    return reduced_rank(tower_decomposition(build_root(tau_profile(sd, p))));
}

i64 delta_inf_minus_delta_free(const Exponents& a, i64 p) {
    const i64 r1 = hf_red_rank(a, 1);
    const i64 rp = hf_red_rank(a, p);
    if (r1 < rp)
        fail(Errc::negative_difference, "quotient rank exceeds the manifold rank at p = " + std::to_string(p));
    return r1 - rp;
}

i64 delta_inf_free_absolute(i64 a, i64 b, i64 c, i64 p) {
    const Exponents e = Exponents::of({a, b, c});
    const i64 delta_sigma = -d_invariant_minus(a, b, c) / 2;
    const i64 value = delta_sigma + delta_inf_minus_delta_free(e, p);
    if (zint_of(p) > bound_N(e) && value != -casson(a, b, c))
        fail(Errc::cross_check_failure, "delta_inf != -lambda for p > N");
    return value;
}

i64 branched_bound(const BranchedPair& bp) {
    const i64 rank_total = hf_red_rank(bp.total, 1);
    const i64 rank_base = hf_red_rank(bp.base, 1);
    const i64 bound = rank_total - bp.p * rank_base;
    if (bound < 0) fail(Errc::negative_bound, "rank(Y) < p*rank(Y_0)");
    return bound;
}

i64 sigma_equivariant(i64 a, i64 b, i64 c) {
    if (!is_prime(c)) fail(Errc::not_prime, std::to_string(c) + " is not prime");
    return 8 * casson(a, b, c);
}

TorusKnotReport torus_knot_report(i64 a, i64 b, i64 c) {
    if (a <= 1 || b <= 1) fail(Errc::exponent_too_small, "knot parameters must be > 1");
    if (gcd_ll(a, b) != 1) fail(Errc::not_pairwise_coprime, "knot parameters must be coprime");
    if (!is_prime(c)) fail(Errc::not_prime, std::to_string(c) + " is not prime");
    if (a % c == 0 || b % c == 0)
        fail(Errc::prime_divides_product, std::to_string(c) + " divides " + std::to_string(a * b));

    TorusKnotReport rep;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    rep.kappa = kappa(a, b, c);
    const i64 lam = casson(a, b, c);
    rep.sigma_c = 8 * lam;
    rep.j_inv = (c == 2) ? 2 * rep.kappa : rep.kappa;
    rep.theta = rat_max(Rational(0), Rational(2 * rep.kappa - 4 * lam, c - 1));
    return rep;
}

bool j_prime_crosscheck(i64 a, i64 b, i64 c) {
    const Exponents e = Exponents::of({a, b, c});
    const TauProfile tp = tau_profile(brieskorn_seifert_data(e), 1);
    const UModule mod = tower_decomposition(build_root(tp));
    if (mod.finite.empty()) return true;
    const i64 d_minus = d_invariant_minus(a, b, c);
    const i64 shift = d_minus - 2 * min_tau(tp);
    const i64 ell_plus = top_reduced_degree_rel(mod) + shift;
    const i64 lambda_minus = -casson(a, b, c);
    if (ell_plus % 2 != 0) return false;
    return ell_plus / 2 + lambda_minus == kappa(a, b, c);
}

InvariantReport invariant_report(const Exponents& a) {
    InvariantReport rep;
    rep.exponents = a.display();
    rep.N = bound_N(a);

    const SeifertData sd = brieskorn_seifert_data(a);
    const TauProfile tp = tau_profile(sd, 1);
    const UModule mod = tower_decomposition(build_root(tp));
    rep.hf_red_rank = reduced_rank(mod);
    rep.min_tau = min_tau(tp);

    if (a.count() == 3) {
        const auto& v = a.sorted();
        rep.kappa = kappa(v[0], v[1], v[2]);
        rep.casson_lambda = casson(v[0], v[1], v[2]);
        rep.d_minus = 2 * (*rep.kappa + *rep.casson_lambda + rep.min_tau);
        rep.delta_sigma = -*rep.d_minus / 2;
        if (!mod.finite.empty())
            rep.ell_plus = top_reduced_degree_rel(mod) + *rep.d_minus - 2 * rep.min_tau;
    }
    return rep;
}

} // namespace brieskorn
