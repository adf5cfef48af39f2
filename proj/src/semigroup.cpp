#include "brieskorn/semigroup.hpp"

#include <algorithm>

namespace brieskorn {

Zint bound_N(const Exponents& a) {
    Zint A = a.product();
    Zint N = zint_of(a.count() - 2) * A;
    for (i64 v : a.sorted()) N -= A / zint_of(v);
    return N;
}

i64 bound_N_i64(const Exponents& a) { return to_i64(bound_N(a), "semigroup bound N"); }

Semigroup build_membership(const Exponents& a) {
    Semigroup g;
    g.N = bound_N_i64(a);
    Zint A = a.product();
    for (i64 v : a.sorted()) g.generators.push_back(to_i64(A / zint_of(v), "semigroup generator"));
    std::sort(g.generators.begin(), g.generators.end());
    if (g.N < 0) return g;

    g.member.assign(static_cast<size_t>(g.N) + 1, 0);
    g.member[0] = 1;
    for (i64 s : g.generators) {
        if (s > g.N) continue;
        for (i64 n = s; n <= g.N; ++n) g.member[n] |= g.member[n - s];
    }
    return g;
}

i64 kappa(i64 a, i64 b, i64 c) {
    Semigroup g = build_membership(Exponents::of({a, b, c}));
    if (g.N < 0) return 0;
    i64 count = 0;
    for (uint8_t m : g.member) count += m;
    return count;
}

Digits unique_representation(i64 n, i64 a, i64 b, i64 c) {
    const Exponents e = Exponents::of({a, b, c});
    if (n < 0 || zint_of(n) > bound_N(e)) fail(Errc::out_of_range, "n outside [0, N]");
    Digits d;
    d.i = mul_mod(n % a, mod_inverse(mul_mod(b % a, c % a, a), a), a);
    d.j = mul_mod(n % b, mod_inverse(mul_mod(a % b, c % b, b), b), b);
    d.k = mul_mod(n % c, mod_inverse(mul_mod(a % c, b % c, c), c), c);
    i128 sum = i128(b) * c * d.i + i128(a) * c * d.j + i128(a) * b * d.k;
    if (sum != n)
        fail(Errc::not_in_semigroup, std::to_string(n) + " has no digit representation");
    return d;
}

bool member_via_digits(i64 n, i64 a, i64 b, i64 c) {
    if (n == 0) return true;
    i64 i = mul_mod(n % a, mod_inverse(mul_mod(b % a, c % a, a), a), a);
    i64 j = mul_mod(n % b, mod_inverse(mul_mod(a % b, c % b, b), b), b);
    i64 k = mul_mod(n % c, mod_inverse(mul_mod(a % c, b % c, c), c), c);
    return i128(b) * c * i + i128(a) * c * j + i128(a) * b * k == n;
}

i64 lattice_count_tau1(i64 a, i64 b, i64 c) {
    Exponents::of({a, b, c}); // validate
    // For fixed (x, y) the constraint is z*ab < abc - x*bc - y*ac, so the
    // number of admissible z in [1, c-1] is min(c-1, floor((K-1)/ab)).
    i64 count = 0;
    const i128 abc = i128(a) * b * c;
    for (i64 x = 1; x < a; ++x) {
        for (i64 y = 1; y < b; ++y) {
            i128 K = abc - i128(x) * b * c - i128(y) * a * c;
            if (K <= 0) continue;
            i64 zmax = static_cast<i64>((K - 1) / (i128(a) * b));
            count += std::min(c - 1, zmax);
        }
    }
    return count;
}

} // namespace brieskorn
