#include "brieskorn/delta_tau.hpp"

#include <algorithm>
#include <limits>

namespace brieskorn {

namespace {

constexpr i64 kMaxProfilePoints = (1LL << 28);

void require_scale(const SeifertData& sd, i64 p) {
    if (p == 1) return;
    if (p < 1 || !is_prime(p)) fail(Errc::not_prime, "scale " + std::to_string(p) + " must be 1 or prime");
    if (sd.a.index_divisible_by(p) >= 0)
        fail(Errc::prime_divides_exponent, "scale " + std::to_string(p) + " divides an exponent");
}

i64 delta_at_big(const SeifertData& sd, i64 p, i64 n) {
    Zint np = zint_of(n) * zint_of(p);
    Zint acc = 1 - np * zint_of(sd.e0);
    const auto& av = sd.a.sorted();
    for (size_t j = 0; j < av.size(); ++j) {
        Zint num = np * zint_of(sd.b[j]) + zint_of(av[j] - 1);
        acc -= num / zint_of(av[j]); // ceil(np*b_j/a_j) on nonnegative operands
    }
    return to_i64(acc, "delta value");
}

} // namespace

i64 delta_at(const SeifertData& sd, i64 p, i64 n) {
    require_scale(sd, p);
    if (n < 0) fail(Errc::out_of_range, "n must be nonnegative");
    const auto& av = sd.a.sorted();
    const i64 amax = av.back();
    // Widen through __int128 while every term fits: n*p <= i128_max/(4*amax)
    // keeps the e0 term, each ceiling and their sum inside the type (|e0| < r
    // and r < amax for pairwise coprime exponents).
    const i128 cap = (i128_max / 4) / amax;
    if (n != 0 && (i128(n) > cap / p || i128(n) * p > cap)) return delta_at_big(sd, p, n);
    const i128 np = i128(n) * p;
    i128 acc = 1 - np * sd.e0;
    for (size_t j = 0; j < av.size(); ++j) acc -= (np * sd.b[j] + av[j] - 1) / av[j];
    if (acc < std::numeric_limits<i64>::min() || acc > std::numeric_limits<i64>::max())
        fail(Errc::profile_too_large, "delta value exceeds 64-bit range");
    return static_cast<i64>(acc);
}

i64 delta_via_semigroup(const Semigroup& g, i64 n) {
    if (n < 0 || n > g.N) fail(Errc::out_of_range, "n outside [0, N]");
    if (g.contains(n)) return 1;
    if (g.contains(g.N - n)) return -1;
    return 0;
}

i64 delta_via_semigroup(i64 a, i64 b, i64 c, i64 n) {
    return delta_via_semigroup(build_membership(Exponents::of({a, b, c})), n);
}

TauProfile tau_profile(const SeifertData& sd, i64 p) {
    require_scale(sd, p);
    TauProfile tp;
    tp.source = sd;
    tp.p = p;
    tp.N = bound_N(sd.a);

    if (tp.N < 0) {
        tp.Np = -1;
        tp.domain_end = 0;
        tp.tau = {0};
        return tp;
    }

    Zint npz = tp.N / zint_of(p);
    tp.Np = to_i64(npz, "profile cutoff N/p");
    if (tp.Np + 2 > kMaxProfilePoints)
        fail(Errc::profile_too_large, "profile needs " + std::to_string(tp.Np + 2) + " points");
    tp.domain_end = tp.Np + 1;

    tp.delta.resize(static_cast<size_t>(tp.Np) + 1);
    tp.tau.resize(static_cast<size_t>(tp.domain_end) + 1);
    tp.tau[0] = 0;

    const auto& av = sd.a.sorted();
    const int r = sd.a.count();
    // Step the floors of n*p*b_j/a_j incrementally: one add and one division
    // per generator per step, all within __int128.
    std::vector<i128> rem(r, 0), flr(r, 0);
    std::vector<i128> step(r);
    bool fast = true;
    for (int j = 0; j < r; ++j) {
        step[j] = i128(p) * sd.b[j];
        if (tp.Np > 0 && step[j] > (i128_max - av[j]) / (tp.Np + 1)) fast = false;
    }

    i64 t = 0;
    for (i64 n = 0; n <= tp.Np; ++n) {
        i64 d;
        if (fast) {
            i128 acc = 1 - i128(n) * p * sd.e0;
            for (int j = 0; j < r; ++j) acc -= flr[j] + (rem[j] > 0 ? 1 : 0);
            d = static_cast<i64>(acc);
            for (int j = 0; j < r; ++j) {
                rem[j] += step[j];
                flr[j] += rem[j] / av[j];
                rem[j] %= av[j];
            }
        } else {
            d = delta_at_big(sd, p, n);
        }
        tp.delta[n] = static_cast<int>(d);
        t += d;
        tp.tau[n + 1] = t;
    }
    return tp;
}

i64 min_tau(const TauProfile& tp) { return *std::min_element(tp.tau.begin(), tp.tau.end()); }

MaximaClassification classify_maxima(const TauProfile& tp) {
    if (tp.p != 1 || tp.source.a.count() != 3)
        fail(Errc::unsupported_case, "maxima classification needs p = 1 and r = 3");
    if (tp.N < 0)
        fail(Errc::unsupported_case, "maxima classification excludes (2,3,5)");

    const auto& tau = tp.tau;
    const i64 end = tp.domain_end; // = N + 1
    MaximaClassification mc;
    mc.max_value = *std::max_element(tau.begin(), tau.end());
    if (mc.max_value != 1)
        fail(Errc::property_violation, "tau maximum is " + std::to_string(mc.max_value) + ", expected 1");

    // Longest prefix [1, t] and suffix [s, N] on which tau == 1.
    i64 t = 0;
    while (t + 1 < end && tau[t + 1] == 1) ++t;
    i64 s = end; // first index of the suffix run; tau(N) = 1 so s <= N
    while (s - 1 >= 1 && tau[s - 1] == 1) --s;
    for (i64 n = t + 1; n < s; ++n) {
        if (tau[n] == 1) {
            mc.all_trivial = false;
            mc.witness = n;
            break;
        }
    }
    return mc;
}

} // namespace brieskorn
