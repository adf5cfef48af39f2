#pragma once

// Delta and tau sequences. For Seifert data (e0, (a_j, b_j)) and a scale p
// (p = 1 for the manifold itself, p prime and coprime to the exponents for
// the free quotient):
//
//     delta_p(n) = 1 - n*p*e0 - sum_j ceil(n*p*b_j / a_j)
//     tau(i)     = sum_{n<i} delta_p(n)
//
// The profile stops at N_p + 1 with N_p = floor(N/p); past that point the
// sequence is nondecreasing, so the truncation carries the whole graded root.
// For r = 3, p = 1 the sequence is also characterized by semigroup
// membership: delta(n) = 1 if n in G, -1 if N-n in G, 0 otherwise.

#include <optional>
#include <vector>

#include "brieskorn/semigroup.hpp"

namespace brieskorn {

struct TauProfile {
    SeifertData source;
    i64 p = 1;
    Zint N;              // bound_N of the exponents
    i64 Np = -1;         // floor(N/p); -1 when N < 0
    i64 domain_end = 0;  // Np + 1, clamped to 0 when N < 0
    std::vector<int> delta;  // delta_p(0 .. Np)
    std::vector<i64> tau;    // tau(0 .. domain_end), tau[0] = 0
};

i64 delta_at(const SeifertData& sd, i64 p, i64 n);

// The semigroup case rule, r = 3 only, 0 <= n <= N.
i64 delta_via_semigroup(const Semigroup& g, i64 n);
i64 delta_via_semigroup(i64 a, i64 b, i64 c, i64 n);

TauProfile tau_profile(const SeifertData& sd, i64 p);

i64 min_tau(const TauProfile& tp);

struct MaximaClassification {
    i64 max_value = 0;
    bool all_trivial = true;
    std::optional<i64> witness; // index of a nontrivial global maximum
};

// Trivial-maximum scan for r = 3, p = 1, (a,b,c) != (2,3,5): a global
// maximum n is trivial when tau == 1 on all of [1, n] or all of [n, N].
MaximaClassification classify_maxima(const TauProfile& tp);

} // namespace brieskorn
