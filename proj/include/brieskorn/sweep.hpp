#pragma once

// Bulk property sweeps over coprime triples. One pass per triple computes the
// membership table, the delta sequence by both routes, the tau extrema and
// the ranks of all requested quotients; the check suites run off that shared
// state. Sweeps fan out over a bounded worker pool; violations are collected
// per worker and merged in sorted order, so output is deterministic.

#include <array>
#include <string>
#include <vector>

#include "brieskorn/graded_root.hpp"

namespace brieskorn {

// Pairwise coprime 1 < a < b < c with abc <= max_product, lexicographic.
std::vector<std::array<i64, 3>> coprime_triples(i64 max_product);

struct Violation {
    std::string check;
    std::string detail;

    friend bool operator<(const Violation& x, const Violation& y) {
        return x.check != y.check ? x.check < y.check : x.detail < y.detail;
    }
};

struct SweepOptions {
    i64 max_product = 100000;
    i64 prime_lo = 2;
    i64 prime_hi = 37;
    int workers = 0;        // 0 = hardware concurrency
    i64 tie_break_cap = 10000; // product cap for the pairwise decomposition test
    i64 max_b = 12;         // torus-knot sweep: coprime 1 < a < b <= max_b
};

struct CheckResult {
    std::string name;
    i64 cases_checked = 0;
    i64 total_violations = 0;
    std::vector<Violation> violations; // capped; total_violations has the true count

    bool passed() const { return total_violations == 0; }
};

// Per-triple scratch state, reused across a worker's triples.
class TripleScan {
public:
    // Computes everything for (a, b, c): Seifert data, membership, both delta
    // routes (checked against each other), tau, extrema, rank. Returns false
    // for the degenerate N < 0 case after filling the trivial fields. With
    // need_membership = false the semigroup table (and kappa) are skipped and
    // only the ceiling route runs.
    bool analyze(i64 a, i64 b, i64 c, std::vector<Violation>* out, bool need_membership = true);

    i64 a = 0, b = 0, c = 0;
    i64 N = -1;
    i64 e0 = 0;
    std::array<i64, 3> bb{};  // Seifert b_j against (a, b, c)
    i64 kappa = 0;
    i64 rank1 = 0;
    i64 min_tau = 0;
    i64 max_tau = 0;
    std::vector<uint8_t> member; // [0, N]
    std::vector<int8_t> delta;   // [0, N]
    std::vector<i64> ext_min, ext_max; // alternating extrema of tau

    // Rank of the p-scaled profile read off the stored delta sequence.
    i64 quotient_rank(i64 p) const;

    // delta_p(n) evaluated from the formula for n beyond the stored range.
    i64 delta_scaled(i64 p, i64 n) const;

private:
    std::vector<int> tau_;

public:
    const std::vector<int>& tau() const { return tau_; }
};


// Named property suites (the `scan` command and the acceptance tests share
// these): "kappa", "symmetry", "exceptions", "kl", "theta".
std::vector<std::string> known_checks();
std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const SweepOptions& opt);

} // namespace brieskorn
