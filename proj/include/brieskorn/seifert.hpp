#pragma once

// Seifert invariants of Brieskorn homology spheres Sigma(a_1, ..., a_r):
// the unique (e0, b_1..b_r) with 0 < b_j < a_j and
//
//     e0 + sum_j b_j/a_j = -1/(a_1 ... a_r),
//
// plus the two quotient shapes used downstream: the branched pair
// (Sigma(p*a1, a2, ...), Sigma(a1, a2, ...)) for p dividing an exponent, and
// the unnormalized Seifert descriptor of the free quotient Y/Z_p.

#include <utility>
#include <vector>

#include "brieskorn/numeric.hpp"

namespace brieskorn {

// Pairwise coprime exponents, each > 1, r >= 3. Kept sorted ascending for
// computation; the order given at construction is preserved for display.
class Exponents {
public:
    static Exponents of(std::vector<i64> values);

    const std::vector<i64>& display() const { return display_; }
    const std::vector<i64>& sorted() const { return sorted_; }
    int count() const { return static_cast<int>(sorted_.size()); }
    Zint product() const;

    // Exponent divisible by p, or -1. Pairwise coprimality means at most one.
    int index_divisible_by(i64 p) const;

    friend bool operator==(const Exponents&, const Exponents&) = default;

private:
    std::vector<i64> display_;
    std::vector<i64> sorted_;
};

struct SeifertData {
    Exponents a;
    i64 e0 = 0;            // always negative; |e0| < r
    std::vector<i64> b;    // aligned with a.sorted()
    Zint A;                // product of exponents
};

// The unique Seifert data of Sigma(a). b_j is the representative in
// (0, a_j) of -(A/a_j)^{-1} mod a_j; e0 then comes out of the defining
// identity by exact division.
SeifertData brieskorn_seifert_data(const Exponents& a);

struct BranchedPair {
    Exponents total; // Sigma(p*a1, a2, ..., a_r)
    Exponents base;  // Sigma(a1, a2, ..., a_r), the Z_p quotient
    i64 p = 0;
};

BranchedPair branched_pair(const Exponents& total, i64 p);

// Unnormalized Seifert descriptor (p*e0, (a_j, p*b_j)) of the free quotient
// Y/Z_p; reporting only.
struct QuotientSeifert {
    i64 p = 0;
    Zint e0p;
    std::vector<std::pair<i64, Zint>> pairs; // display order
};

QuotientSeifert free_quotient_data(const SeifertData& sd, i64 p);

} // namespace brieskorn
