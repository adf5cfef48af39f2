#pragma once

// Numerical invariants assembled from the semigroup and graded-root data.
// Orientation convention: the tau profile computes HF^+ of -Sigma, so kappa,
// d_minus, ell_plus and min_tau refer to -Sigma; the Casson invariant and
// delta_sigma refer to +Sigma. Reduced rank is orientation independent.
//
// Key identities, all exact:
//     8*lambda(Sigma(a,b,c)) = -(a-1)(b-1)(c-1) + 4*kappa(a,b,c)
//     d(-Sigma(a,b,c))       = 2*(kappa + lambda + min tau)
//     rank HF_red            = -delta(Sigma) - lambda(Sigma)
//     theta^(c)(T_{a,b})     = max{0, (2*kappa - 4*lambda)/(c-1)}

#include <optional>

#include "brieskorn/graded_root.hpp"

namespace brieskorn {

i64 casson(i64 a, i64 b, i64 c);

// d(-Sigma(a,b,c)), an even integer.
i64 d_invariant_minus(i64 a, i64 b, i64 c);

// Rank of HF^+_red(-Y) for p = 1, or of the free quotient HF^+_red(-Y_0, s_0)
// for p prime coprime to the exponents.
i64 hf_red_rank(const Exponents& a, i64 p = 1);

// delta_inf^(p)(Y) - delta(Y) = rank(Y) - rank(Y_0, s_0); nonnegative.
i64 delta_inf_minus_delta_free(const Exponents& a, i64 p);

// delta_inf^(p)(Sigma(a,b,c)) for free p; equals -lambda when p > N.
i64 delta_inf_free_absolute(i64 a, i64 b, i64 c, i64 p);

// rank(Y) - p*rank(Y_0) for a branched pair: a lower bound for
// delta(-Y) - delta_inf^(p)(-Y), and itself nonnegative.
i64 branched_bound(const BranchedPair& bp);

// sigma^(c)(T_{a,b}) = 8*lambda(Sigma(a,b,c)), c prime.
i64 sigma_equivariant(i64 a, i64 b, i64 c);

struct TorusKnotReport {
    i64 a = 0, b = 0, c = 0;
    i64 kappa = 0;
    i64 sigma_c = 0;  // equivariant signature
    i64 j_inv = 0;    // kappa for odd c, 2*kappa for c = 2
    Rational theta;
};

TorusKnotReport torus_knot_report(i64 a, i64 b, i64 c);

// Two routes to kappa: ell_plus(-Sigma)/2 + lambda(-Sigma) computed from the
// graded root with its absolute shift must reproduce the semigroup count.
// Vacuously true when the reduced part is empty.
bool j_prime_crosscheck(i64 a, i64 b, i64 c);

struct InvariantReport {
    std::vector<i64> exponents; // display order
    Zint N;
    i64 hf_red_rank = 0;
    i64 min_tau = 0;
    // r = 3 only:
    std::optional<i64> kappa;
    std::optional<i64> casson_lambda;
    std::optional<i64> d_minus;       // d(-Sigma)
    std::optional<i64> delta_sigma;   // delta(Sigma) = -d_minus/2
    std::optional<i64> ell_plus;      // top reduced degree of -Sigma; absent when rank = 0
};

InvariantReport invariant_report(const Exponents& a);

} // namespace brieskorn
