#pragma once

// The numerical semigroup G generated by {A/a_j} and the quantities read off
// it: the bound N = (r-2)A - sum A/a_j, membership of G on [0, N], the count
// kappa = |G cap [0, N]| (r = 3), unique digit representations, and the
// independent lattice-point count tau_1.

#include <vector>

#include "brieskorn/seifert.hpp"

namespace brieskorn {

// (r-2)*A - sum_j A/a_j. Negative only for (2,3,5).
Zint bound_N(const Exponents& a);

// bound_N when it fits in 64 bits; otherwise ProfileTooLarge. Everything that
// walks [0, N] goes through this.
i64 bound_N_i64(const Exponents& a);

struct Semigroup {
    std::vector<i64> generators; // A/a_j, ascending
    i64 N = -1;
    std::vector<uint8_t> member; // member[n] for n in [0, N]; empty when N < 0

    bool contains(i64 n) const { return n >= 0 && n <= N && member[static_cast<size_t>(n)]; }
};

// Dense membership table of G on [0, N] by forward DP over the generators.
Semigroup build_membership(const Exponents& a);

// |G cap [0, N]| for a triple; 0 when N < 0.
i64 kappa(i64 a, i64 b, i64 c);

struct Digits {
    i64 i = 0, j = 0, k = 0;
};

// The unique (i, j, k) >= 0 with n = bc*i + ac*j + ab*k, i < a, j < b, k < c.
// Throws NotInSemigroup when no representation exists.
Digits unique_representation(i64 n, i64 a, i64 b, i64 c);

// Membership of n in G via the digit representation alone (CRT determines the
// candidate digits; n is in G iff they reproduce n). Valid for 0 <= n < abc.
bool member_via_digits(i64 n, i64 a, i64 b, i64 c);

// #{(x,y,z) : 0<x<a, 0<y<b, 0<z<c, x/a + y/b + z/c < 1}, exact cross-
// multiplied comparisons. Independent route to kappa.
i64 lattice_count_tau1(i64 a, i64 b, i64 c);

} // namespace brieskorn
