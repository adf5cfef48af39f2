#pragma once

// Graded roots and their U-module decomposition. A graded root built from a
// tau profile is determined by the alternating list of local extrema
//
//     m_0, M_1, m_1, M_2, ..., M_k, m_k    (m_i < min(M_i, M_{i+1}))
//
// with leaves at the minima and merges at the maxima. The associated module
// splits as one infinite tower based at 2*min(tau) plus one finite tower per
// remaining leaf; the decomposition orders leaves by increasing value and
// merges each into the nearest prior leaf, the merge height being the
// largest maximum between them.

#include <vector>

#include "brieskorn/delta_tau.hpp"

namespace brieskorn {

struct GradedRoot {
    std::vector<i64> minima;   // leaf values, positional order
    std::vector<i64> maxima;   // merge values; maxima[i] sits between minima[i] and minima[i+1]
    std::vector<i64> min_pos;  // first tau index of each minimum plateau
    std::vector<i64> max_pos;  // first tau index of each maximum plateau
};

GradedRoot build_root(const TauProfile& tp);

// Same construction from a bare value sequence, treated as continuing
// nondecreasing past its last entry.
GradedRoot build_root_from_values(const std::vector<i64>& tau);

struct Tower {
    i64 bottom = 0; // degree 2*chi(leaf)
    i64 length = 0; // chi(merge) - chi(leaf), >= 1

    friend bool operator==(const Tower&, const Tower&) = default;
};

struct UModule {
    i64 infinite_bottom = 0;   // 2*min(tau)
    std::vector<Tower> finite; // sorted by (bottom, length)
};

enum class TieBreak { leftmost, rightmost };

// Leaf-ordering decomposition; the tie-break among equal-value leaves does
// not change the module (tested, not assumed).
UModule tower_decomposition(const GradedRoot& gr, TieBreak tb = TieBreak::leftmost);

i64 reduced_rank(const UModule& m);

// Highest degree of the reduced part, in the 2*chi grading.
i64 top_reduced_degree_rel(const UModule& m);

// True when no top-degree reduced element is in the image of U, i.e. every
// tower reaching the top degree has length 1.
bool u_image_top_degree_check(const UModule& m);

// Rank of the full module in degree 2*level (infinite tower included).
i64 module_rank_at(const UModule& m, i64 level);

// Number of root vertices with chi == level, straight from the extremum
// list. Independent route to the per-degree ranks.
i64 root_vertex_count(const GradedRoot& gr, i64 level);

// Total reduced rank directly from the extrema: sum(maxima) - sum(minima)
// + min(minima). Used by the sweeps; agrees with the decomposition.
i64 reduced_rank_from_extrema(const std::vector<i64>& minima, const std::vector<i64>& maxima);

} // namespace brieskorn
