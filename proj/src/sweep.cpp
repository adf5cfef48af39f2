#include "brieskorn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

#include "brieskorn/invariants.hpp"

namespace brieskorn {

namespace {

constexpr size_t kMaxStoredViolations = 100;

std::string triple_str(i64 a, i64 b, i64 c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

void report(std::vector<Violation>& out, const std::string& check, std::string detail) {
    out.push_back({check, std::move(detail)});
}

// Streaming extremum collector with the nondecreasing-tail convention: the
// final run is a leaf only when entered by a descent.
struct ExtremaStream {
    std::vector<i64>* mins;
    std::vector<i64>* maxs;
    i64 value = 0;
    int trend = 0;

    void step(i64 d) {
        if (d > 0) {
            if (trend <= 0) mins->push_back(value);
            trend = 1;
        } else if (d < 0) {
            if (trend > 0) maxs->push_back(value);
            trend = -1;
        }
        value += d;
    }
    void finish() {
        if (trend <= 0) mins->push_back(value);
    }
};

} // namespace

std::vector<std::array<i64, 3>> coprime_triples(i64 max_product) {
    std::vector<std::array<i64, 3>> out;
    for (i64 a = 2; a * (a + 1) * (a + 2) <= max_product; ++a) {
        for (i64 b = a + 1; a * b * (b + 1) <= max_product; ++b) {
            if (gcd_ll(a, b) != 1) continue;
            const i64 cmax = max_product / (a * b);
            for (i64 c = b + 1; c <= cmax; ++c) {
                if (gcd_ll(a, c) == 1 && gcd_ll(b, c) == 1) out.push_back({a, b, c});
            }
        }
    }
    return out;
}

bool TripleScan::analyze(i64 A, i64 B, i64 C, std::vector<Violation>* out, bool need_membership) {
    a = A;
    b = B;
    c = C;
    const i64 abc = a * b * c;
    N = abc - a * b - a * c - b * c;

    // Seifert data over int64: b_j = -(abc/a_j)^{-1} mod a_j.
    const std::array<i64, 3> av{a, b, c};
    for (int j = 0; j < 3; ++j) {
        const i64 aj = av[j];
        const i64 g = mul_mod(av[(j + 1) % 3] % aj, av[(j + 2) % 3] % aj, aj);
        bb[j] = (aj - mod_inverse(g, aj)) % aj;
    }
    i128 acc = -1;
    for (int j = 0; j < 3; ++j) acc -= i128(bb[j]) * (abc / av[j]);
    e0 = static_cast<i64>(acc / abc);
    if (out && (acc % abc != 0 || e0 >= 0))
        report(*out, "seifert-identity", "no integral Euler term for " + triple_str(a, b, c));

    kappa = 0;
    rank1 = 0;
    min_tau = 0;
    max_tau = 0;
    ext_min.clear();
    ext_max.clear();
    member.clear();
    delta.clear();
    tau_.clear();

    if (N < 0) {
        ext_min.push_back(0);
        tau_.push_back(0);
        return false;
    }
    if (N + 2 > std::numeric_limits<int>::max())
        fail(Errc::profile_too_large, "sweep bound too large for " + triple_str(a, b, c));

    // Membership of G = <bc, ac, ab> on [0, N] by forward DP.
    if (need_membership) {
        member.assign(static_cast<size_t>(N) + 1, 0);
        member[0] = 1;
        for (i64 s : {b * c, a * c, a * b}) {
            if (s > N) continue;
            uint8_t* m = member.data();
            for (i64 n = s; n <= N; ++n) m[n] |= m[n - s];
        }
        for (uint8_t m : member) kappa += m;
    }

    // Delta by the ceiling formula, stepped incrementally (b_j < a_j, so each
    // step carries at most once). ceil(n*b_j/a_j) = floor + (rem > 0); F
    // tracks the floor sum.
    delta.resize(static_cast<size_t>(N) + 1);
    const bool store_tau = need_membership;
    if (store_tau) {
        tau_.resize(static_cast<size_t>(N) + 2);
        tau_[0] = 0;
    }
    i64 r0 = 0, r1 = 0, r2 = 0;
    i64 F = 0, e0_term = 0;
    i64 t = 0;
    ExtremaStream ext{&ext_min, &ext_max};
    for (i64 n = 0; n <= N; ++n) {
        const i64 K = (r0 > 0) + (r1 > 0) + (r2 > 0);
        const i64 d = 1 - e0_term - F - K;
        delta[n] = static_cast<int8_t>(d);
        ext.step(d);
        t += d;
        if (store_tau) tau_[n + 1] = static_cast<int>(t);
        e0_term += e0;
        r0 += bb[0];
        r1 += bb[1];
        r2 += bb[2];
        if (r0 >= av[0]) { r0 -= av[0]; ++F; }
        if (r1 >= av[1]) { r1 -= av[1]; ++F; }
        if (r2 >= av[2]) { r2 -= av[2]; ++F; }
    }
    ext.finish();

    for (i64 v : ext_min) min_tau = std::min(min_tau, v);
    max_tau = std::max<i64>(0, t);
    for (i64 v : ext_max) max_tau = std::max(max_tau, v);
    rank1 = reduced_rank_from_extrema(ext_min, ext_max);

    // The semigroup case rule must reproduce the ceiling route everywhere.
    if (out && need_membership) {
        const int8_t* d = delta.data();
        const uint8_t* m = member.data();
        unsigned bad = 0;
        for (i64 n = 0; n <= N; ++n) bad |= static_cast<unsigned>(d[n] != m[n] - m[N - n]);
        if (bad) {
            for (i64 n = 0; n <= N; ++n) {
                if (d[n] != m[n] - m[N - n]) {
                    report(*out, "delta-oracle",
                           "ceiling formula gives " + std::to_string(+d[n]) + ", semigroup rule " +
                               std::to_string(m[n] - m[N - n]) + " at n=" + std::to_string(n) +
                               " for " + triple_str(a, b, c));
                    break;
                }
            }
        }
    }
    return true;
}

i64 TripleScan::quotient_rank(i64 p) const {
    if (N < 0) return 0;
    const i64 np = N / p;
    // rank = sum(maxima) - sum(minima) + min(minima), accumulated in place.
    i64 sum_max = 0, sum_min = 0, min_min = 0, value = 0;
    int trend = 0;
    for (i64 n = 0; n <= np; ++n) {
        const i64 d = delta[n * p];
        if (d > 0) {
            if (trend <= 0) {
                sum_min += value;
                min_min = std::min(min_min, value);
            }
            trend = 1;
        } else if (d < 0) {
            if (trend > 0) sum_max += value;
            trend = -1;
        }
        value += d;
    }
    if (trend <= 0) {
        sum_min += value;
        min_min = std::min(min_min, value);
    }
    return sum_max - sum_min + min_min;
}

i64 TripleScan::delta_scaled(i64 p, i64 n) const {
    const std::array<i64, 3> av{a, b, c};
    i128 acc = 1 - i128(n) * p * e0;
    for (int j = 0; j < 3; ++j) acc -= (i128(n) * p * bb[j] + av[j] - 1) / av[j];
    return static_cast<i64>(acc);
}

namespace {

// ---- per-triple check suites -------------------------------------------

struct SuiteContext {
    const SweepOptions* opt;
    std::vector<i64> primes; // [prime_lo, prime_hi]
    i64* cases;              // per-worker case counter for the active suite
};

void check_kappa_suite(const TripleScan& ts, const SuiteContext& ctx, std::vector<Violation>& out) {
    const std::string where = triple_str(ts.a, ts.b, ts.c);
    ++*ctx.cases;

    // kappa against the lattice-point count (two independent algorithms).
    i64 tau1 = 0;
    const i128 abc = i128(ts.a) * ts.b * ts.c;
    for (i64 x = 1; x < ts.a; ++x) {
        for (i64 y = 1; y < ts.b; ++y) {
            const i128 K = abc - i128(x) * ts.b * ts.c - i128(y) * ts.a * ts.c;
            if (K <= 0) continue;
            tau1 += std::min<i64>(ts.c - 1, static_cast<i64>((K - 1) / (i128(ts.a) * ts.b)));
        }
    }
    if (tau1 != ts.kappa)
        report(out, "kappa-lattice", "kappa=" + std::to_string(ts.kappa) + " but tau1=" +
                                         std::to_string(tau1) + " for " + where);

    // 8*lambda integrality.
    const i128 num = 4 * i128(ts.kappa) - i128(ts.a - 1) * (ts.b - 1) * (ts.c - 1);
    if (num % 8 != 0) report(out, "kappa-mod8", "4k-(a-1)(b-1)(c-1) not 0 mod 8 for " + where);

    if (ts.N < 0) return;

    // N itself is never in G.
    if (ts.member[ts.N]) report(out, "kappa-N-membership", "N lies in G for " + where);

    // Closure under adding generators inside [0, N].
    for (i64 s : {ts.b * ts.c, ts.a * ts.c, ts.a * ts.b}) {
        const uint8_t* m = ts.member.data();
        unsigned bad = 0;
        for (i64 n = 0; n + s <= ts.N; ++n) bad |= static_cast<unsigned>(m[n] & ~m[n + s] & 1u);
        if (bad)
            report(out, "kappa-closure", "G not closed under adding " + std::to_string(s) + " for " + where);
    }

    // Digit-representation membership test agrees with the table (small range).
    if (abc <= 5000) {
        const i64 inv_bc = mod_inverse(mul_mod(ts.b % ts.a, ts.c % ts.a, ts.a), ts.a);
        const i64 inv_ac = mod_inverse(mul_mod(ts.a % ts.b, ts.c % ts.b, ts.b), ts.b);
        const i64 inv_ab = mod_inverse(mul_mod(ts.a % ts.c, ts.b % ts.c, ts.c), ts.c);
        for (i64 n = 0; n <= ts.N; ++n) {
            const i64 i = mul_mod(n % ts.a, inv_bc, ts.a);
            const i64 j = mul_mod(n % ts.b, inv_ac, ts.b);
            const i64 k = mul_mod(n % ts.c, inv_ab, ts.c);
            const bool rep = i128(ts.b) * ts.c * i + i128(ts.a) * ts.c * j + i128(ts.a) * ts.b * k == n;
            if (rep != (ts.member[n] != 0)) {
                report(out, "kappa-digits", "digit test disagrees with membership at n=" +
                                                std::to_string(n) + " for " + where);
                break;
            }
        }
    }
}

void check_symmetry_suite(const TripleScan& ts, const SuiteContext& ctx,
                          std::vector<Violation>& out) {
    const std::string where = triple_str(ts.a, ts.b, ts.c);
    ++*ctx.cases;
    if (ts.N < 0) return;
    const auto& tau = ts.tau();

    // Delta range and tau symmetry (via delta antisymmetry).
    {
        const int8_t* d = ts.delta.data();
        unsigned out_of_range = 0, asym = 0;
        for (i64 n = 0; n <= ts.N; ++n) {
            out_of_range |= static_cast<unsigned>(d[n] < -1 || d[n] > 1);
            asym |= static_cast<unsigned>(d[n] != -d[ts.N - n]);
        }
        if (out_of_range) report(out, "delta-range", "delta out of {-1,0,1} for " + where);
        if (asym) report(out, "tau-symmetry", "tau(N+1-n) != tau(n) fails for " + where);
    }

    // tau bounds and endpoint values.
    if (ts.max_tau > 1) report(out, "tau-max", "tau exceeds 1 for " + where);
    if (ts.N >= 1 && (tau[1] != 1 || tau[ts.N] != 1 || tau[ts.N + 1] != 0))
        report(out, "tau-endpoints", "tau(1), tau(N), tau(N+1) != 1, 1, 0 for " + where);

    // Trivial-maxima guarantee for triples outside the (2,3,c) families.
    if (!(ts.a == 2 && ts.b == 3)) {
        i64 tpos = 1;
        while (tpos + 1 <= ts.N && tau[tpos + 1] == 1) ++tpos;
        i64 spos = ts.N;
        while (spos - 1 >= 1 && tau[spos - 1] == 1) --spos;
        for (i64 n = tpos + 1; n < spos; ++n) {
            if (tau[n] == 1) {
                report(out, "tau-trivial-maxima", "nontrivial maximum at n=" + std::to_string(n) + " for " + where);
                break;
            }
        }
    }

    // d-invariant assembly: parity and rank = -delta - lambda.
    const i64 lambda =
        static_cast<i64>((4 * i128(ts.kappa) - i128(ts.a - 1) * (ts.b - 1) * (ts.c - 1)) / 8);
    const i64 d_minus = 2 * (ts.kappa + lambda + ts.min_tau);
    if (d_minus % 2 != 0) report(out, "d-parity", "odd d-invariant for " + where);
    const i64 delta_sigma = -d_minus / 2;
    if (ts.rank1 != -delta_sigma - lambda)
        report(out, "rank-identity", "rank != -delta - lambda for " + where);

    // Two routes to kappa through the top reduced degree.
    if (ts.rank1 > 0 && !ts.ext_max.empty()) {
        const i64 top_rel = 2 * *std::max_element(ts.ext_max.begin(), ts.ext_max.end()) - 2;
        const i64 ell_plus = top_rel + d_minus - 2 * ts.min_tau;
        if (ell_plus % 2 != 0 || ell_plus / 2 + (-lambda) != ts.kappa)
            report(out, "jprime-crosscheck", "ell_plus/2 + lambda(-Y) != kappa for " + where);
    }

    // Nonnegativity past the cutoff: delta(m) >= 0 on (N, 3N], checked by
    // continuing the ceiling walk. Since delta_p(n) = delta(np), this single
    // walk covers the window (N_p, 3N_p] of every scale p at once.
    {
        const std::array<i64, 3> av{ts.a, ts.b, ts.c};
        std::array<i64, 3> rem{};
        i64 F = 0;
        for (int j = 0; j < 3; ++j) {
            const i128 numer = i128(ts.N + 1) * ts.bb[j];
            F += static_cast<i64>(numer / av[j]);
            rem[j] = static_cast<i64>(numer % av[j]);
        }
        // d = S - K with K <= 3, so only steps with S < 4 need the exact test.
        i64 S = 1 - ts.e0 * (ts.N + 1) - F;
        for (i64 m = ts.N + 1; m <= 3 * ts.N; ++m) {
            if (S < 4) {
                const i64 K = (rem[0] > 0) + (rem[1] > 0) + (rem[2] > 0);
                if (S - K < 0) {
                    report(out, "deltap-window",
                           "delta negative past the cutoff at m=" + std::to_string(m) + " for " + where);
                    break;
                }
            }
            S -= ts.e0;
            if ((rem[0] += ts.bb[0]) >= av[0]) { rem[0] -= av[0]; --S; }
            if ((rem[1] += ts.bb[1]) >= av[1]) { rem[1] -= av[1]; --S; }
            if ((rem[2] += ts.bb[2]) >= av[2]) { rem[2] -= av[2]; --S; }
        }
    }

    // Scaling identification delta_p(n) = delta(np), against the formula
    // evaluated from scratch; capped range, every coprime prime.
    if (i128(ts.a) * ts.b * ts.c <= ctx.opt->tie_break_cap) {
        for (i64 p : ctx.primes) {
            if (ts.a % p == 0 || ts.b % p == 0 || ts.c % p == 0) continue;
            const i64 np = ts.N / p;
            for (i64 n = 0; n <= np; ++n) {
                if (ts.delta_scaled(p, n) != ts.delta[n * p]) {
                    report(out, "delta-scaling", "delta_p(n) != delta(np) at n=" + std::to_string(n) +
                                                     ", p=" + std::to_string(p) + " for " + where);
                    break;
                }
            }
        }
    }

    // Decomposition is tie-break independent (and matches the extremum-sum
    // rank); quadratic-ish, so capped.
    if (i128(ts.a) * ts.b * ts.c <= ctx.opt->tie_break_cap) {
        GradedRoot gr;
        gr.minima = ts.ext_min;
        gr.maxima = ts.ext_max;
        const UModule left = tower_decomposition(gr, TieBreak::leftmost);
        const UModule right = tower_decomposition(gr, TieBreak::rightmost);
        if (left.finite != right.finite || left.infinite_bottom != right.infinite_bottom)
            report(out, "tiebreak-independence", "decomposition depends on the tie-break for " + where);
        if (reduced_rank(left) != ts.rank1)
            report(out, "rank-routes", "tower rank != extremum-sum rank for " + where);
        for (i64 level = ts.min_tau; level <= ts.max_tau + 1; ++level) {
            if (module_rank_at(left, level) != root_vertex_count(gr, level)) {
                report(out, "rank-per-degree", "module rank != vertex count at level " +
                                                   std::to_string(level) + " for " + where);
                break;
            }
        }
    }
}

void check_exceptions_suite(const TripleScan& ts, const SuiteContext& ctx,
                            std::vector<Violation>& out) {
    const std::string where = triple_str(ts.a, ts.b, ts.c);
    const bool is235 = ts.a == 2 && ts.b == 3 && ts.c == 5;
    const bool is2311 = ts.a == 2 && ts.b == 3 && ts.c == 11;
    for (i64 p : ctx.primes) {
        if (ts.a % p == 0 || ts.b % p == 0 || ts.c % p == 0) continue;
        ++*ctx.cases;
        const i64 rp = ts.quotient_rank(p);
        if (rp > ts.rank1) {
            report(out, "quotient-monotonicity", "quotient rank exceeds rank at p=" +
                                                     std::to_string(p) + " for " + where);
            continue;
        }
        const bool equal = rp == ts.rank1;
        const bool expected = is235 || (is2311 && p == 5);
        if (equal != expected) {
            report(out, "rank-equality-classification",
                   std::string(equal ? "unexpected equality" : "missing equality") + " at p=" +
                       std::to_string(p) + " for " + where + " (rank=" + std::to_string(ts.rank1) +
                       ", quotient=" + std::to_string(rp) + ")");
        } else if (equal) {
            const i64 want = is235 ? 0 : 1;
            if (ts.rank1 != want)
                report(out, "rank-equality-value", "equality value " + std::to_string(ts.rank1) +
                                                       " != " + std::to_string(want) + " for " + where);
        }
    }
}

void check_kl_suite(const TripleScan& ts, const SuiteContext& ctx, std::vector<Violation>& out,
                    TripleScan& scratch) {
    const std::string where = triple_str(ts.a, ts.b, ts.c);
    for (i64 exp : {ts.a, ts.b, ts.c}) {
        for (i64 p : prime_factors(exp)) {
            std::array<i64, 3> base{ts.a, ts.b, ts.c};
            for (auto& v : base) {
                if (v == exp) v /= p;
            }
            std::sort(base.begin(), base.end());
            if (base[0] == 1) continue; // degenerate quotient
            ++*ctx.cases;
            scratch.analyze(base[0], base[1], base[2], nullptr, false);
            const i64 bound = ts.rank1 - p * scratch.rank1;
            if (bound < 0)
                report(out, "kl-branched-bound",
                       "rank(Y) - p*rank(Y_0) = " + std::to_string(bound) + " < 0 for " + where +
                           ", p=" + std::to_string(p));
        }
    }
}

void run_theta_check(const SweepOptions& opt, CheckResult& res) {
    const auto primes = primes_upto(opt.prime_hi);
    for (i64 a = 2; a <= opt.max_b; ++a) {
        for (i64 b = a + 1; b <= opt.max_b; ++b) {
            if (gcd_ll(a, b) != 1) continue;
            for (i64 c : primes) {
                if (c < opt.prime_lo || a % c == 0 || b % c == 0) continue;
                ++res.cases_checked;
                const TorusKnotReport rep = torus_knot_report(a, b, c);
                if (rep.theta != Rational((a - 1) * (b - 1), 2)) {
                    ++res.total_violations;
                    if (res.violations.size() < kMaxStoredViolations)
                        res.violations.push_back(
                            {"theta-milnor", "theta(T_{" + std::to_string(a) + "," + std::to_string(b) +
                                                 "}) = " + rep.theta.str() + " != (a-1)(b-1)/2 at c=" +
                                                 std::to_string(c)});
                }
            }
        }
    }
}

} // namespace

std::vector<std::string> known_checks() { return {"kappa", "symmetry", "exceptions", "kl", "theta"}; }

std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const SweepOptions& opt) {
    bool want_kappa = false, want_symmetry = false, want_exceptions = false, want_kl = false,
         want_theta = false;
    for (const std::string& n : names) {
        if (n == "kappa" || n == "all") want_kappa = true;
        if (n == "symmetry" || n == "all") want_symmetry = true;
        if (n == "exceptions" || n == "all") want_exceptions = true;
        if (n == "kl" || n == "all") want_kl = true;
        if (n == "theta" || n == "all") want_theta = true;
        if (n != "kappa" && n != "symmetry" && n != "exceptions" && n != "kl" && n != "theta" &&
            n != "all")
            fail(Errc::out_of_range, "unknown check '" + n + "'");
    }

    const bool triple_sweep = want_kappa || want_symmetry || want_exceptions || want_kl;
    if (opt.max_product < 0 || opt.max_product + 2 > std::numeric_limits<int>::max())
        fail(Errc::profile_too_large,
             "sweep bound must lie in [0, 2^31); got " + std::to_string(opt.max_product));
    std::vector<std::array<i64, 3>> triples;
    if (triple_sweep) triples = coprime_triples(opt.max_product);

    std::vector<i64> primes;
    for (i64 p : primes_upto(opt.prime_hi)) {
        if (p >= opt.prime_lo) primes.push_back(p);
    }

    int workers = opt.workers > 0 ? opt.workers
                                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<size_t>(workers, std::max<size_t>(triples.size(), 1)));

    struct Suite {
        std::string name;
        std::vector<std::vector<Violation>> violations; // per worker
        std::vector<i64> cases;                         // per worker
    };
    std::vector<Suite> suites;
    auto add_suite = [&](const char* name) {
        suites.push_back({name, std::vector<std::vector<Violation>>(workers), std::vector<i64>(workers, 0)});
    };
    int idx_oracle = -1, idx_kappa = -1, idx_symmetry = -1, idx_exceptions = -1, idx_kl = -1;
    if (triple_sweep) {
        idx_oracle = static_cast<int>(suites.size());
        add_suite("delta-oracle");
    }
    if (want_kappa) {
        idx_kappa = static_cast<int>(suites.size());
        add_suite("kappa");
    }
    if (want_symmetry) {
        idx_symmetry = static_cast<int>(suites.size());
        add_suite("symmetry");
    }
    if (want_exceptions) {
        idx_exceptions = static_cast<int>(suites.size());
        add_suite("exceptions");
    }
    if (want_kl) {
        idx_kl = static_cast<int>(suites.size());
        add_suite("kl");
    }

    if (triple_sweep) {
        std::atomic<size_t> next{0};
        auto work = [&](int w) {
            TripleScan ts, scratch;
            SuiteContext ctx{&opt, primes, nullptr};
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= triples.size()) break;
                const auto& t = triples[i];
                suites[idx_oracle].cases[w]++;
                ts.analyze(t[0], t[1], t[2], &suites[idx_oracle].violations[w]);
                if (want_kappa) {
                    ctx.cases = &suites[idx_kappa].cases[w];
                    check_kappa_suite(ts, ctx, suites[idx_kappa].violations[w]);
                }
                if (want_symmetry) {
                    ctx.cases = &suites[idx_symmetry].cases[w];
                    check_symmetry_suite(ts, ctx, suites[idx_symmetry].violations[w]);
                }
                if (want_exceptions) {
                    ctx.cases = &suites[idx_exceptions].cases[w];
                    check_exceptions_suite(ts, ctx, suites[idx_exceptions].violations[w]);
                }
                if (want_kl) {
                    ctx.cases = &suites[idx_kl].cases[w];
                    check_kl_suite(ts, ctx, suites[idx_kl].violations[w], scratch);
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
        work(0);
        for (auto& th : pool) th.join();
    }

    std::vector<CheckResult> out;
    for (auto& suite : suites) {
        CheckResult res;
        res.name = suite.name;
        std::vector<Violation> all;
        for (int w = 0; w < workers; ++w) {
            res.cases_checked += suite.cases[w];
            for (auto& v : suite.violations[w]) all.push_back(std::move(v));
        }
        std::sort(all.begin(), all.end());
        res.total_violations = static_cast<i64>(all.size());
        if (all.size() > kMaxStoredViolations) all.resize(kMaxStoredViolations);
        res.violations = std::move(all);
        out.push_back(std::move(res));
    }
    if (want_theta) {
        CheckResult res;
        res.name = "theta";
        run_theta_check(opt, res);
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace brieskorn
