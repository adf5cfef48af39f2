#include "brieskorn/graded_root.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace brieskorn {

GradedRoot build_root_from_values(const std::vector<i64>& tau) {
    if (tau.empty()) fail(Errc::out_of_range, "empty tau sequence");

    // Collapse plateaus into runs of distinct values.
    std::vector<i64> run_val;
    std::vector<i64> run_pos;
    for (size_t i = 0; i < tau.size(); ++i) {
        if (run_val.empty() || tau[i] != run_val.back()) {
            run_val.push_back(tau[i]);
            run_pos.push_back(static_cast<i64>(i));
        }
    }

    // A run is a leaf iff both neighbours are higher. The sequence continues
    // nondecreasing past the end, so the final run only needs a descent into
    // it and the first run only an ascent out of it.
    const size_t s = run_val.size();
    std::vector<size_t> leaves;
    for (size_t i = 0; i < s; ++i) {
        const bool down_left = (i == 0) || run_val[i - 1] > run_val[i];
        const bool up_right = (i + 1 == s) || run_val[i + 1] > run_val[i];
        if (down_left && up_right) leaves.push_back(i);
    }
    if (leaves.empty()) fail(Errc::property_violation, "tau sequence produced no leaf");

    GradedRoot gr;
    for (size_t t = 0; t < leaves.size(); ++t) {
        if (t > 0) {
            // Runs between consecutive leaves are unimodal; the merge sits at
            // their single highest value.
            size_t best = leaves[t - 1] + 1;
            for (size_t i = best + 1; i < leaves[t]; ++i) {
                if (run_val[i] > run_val[best]) best = i;
            }
            gr.maxima.push_back(run_val[best]);
            gr.max_pos.push_back(run_pos[best]);
        }
        gr.minima.push_back(run_val[leaves[t]]);
        gr.min_pos.push_back(run_pos[leaves[t]]);
    }
    return gr;
}

GradedRoot build_root(const TauProfile& tp) { return build_root_from_values(tp.tau); }

UModule tower_decomposition(const GradedRoot& gr, TieBreak tb) {
    const auto& m = gr.minima;
    const auto& M = gr.maxima;
    const int k = static_cast<int>(m.size());

    UModule mod;
    mod.infinite_bottom = 2 * *std::min_element(m.begin(), m.end());
    if (k == 1) return mod;

    // Order leaves by increasing value; ties by position per the tie-break.
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (m[x] != m[y]) return m[x] < m[y];
        return tb == TieBreak::leftmost ? x < y : x > y;
    });

    // Sparse table for range max over the merge values.
    const int km = static_cast<int>(M.size());
    std::vector<std::vector<i64>> table(1, M);
    for (int len = 1; (1 << len) <= km; ++len) {
        const int half = 1 << (len - 1);
        const auto& prev = table.back();
        std::vector<i64> row(km - (1 << len) + 1);
        for (size_t i = 0; i < row.size(); ++i) row[i] = std::max(prev[i], prev[i + half]);
        table.push_back(std::move(row));
    }
    auto range_max = [&](int lo, int hi) { // max of M[lo..hi], inclusive
        const int len = 31 - __builtin_clz(static_cast<unsigned>(hi - lo + 1));
        return std::max(table[len][lo], table[len][hi - (1 << len) + 1]);
    };

    // Each new leaf merges with some already-placed leaf at the smallest
    // possible height; the candidates are the nearest placed leaves on
    // either side, since the separating maximum only grows with distance.
    std::set<int> placed{order[0]};
    for (int t = 1; t < k; ++t) {
        const int q = order[t];
        i64 merge = std::numeric_limits<i64>::max();
        auto it = placed.lower_bound(q);
        if (it != placed.end()) merge = std::min(merge, range_max(q, *it - 1));
        if (it != placed.begin()) {
            const int left = *std::prev(it);
            merge = std::min(merge, range_max(left, q - 1));
        }
        mod.finite.push_back({2 * m[q], merge - m[q]});
        placed.insert(q);
    }
    std::sort(mod.finite.begin(), mod.finite.end(), [](const Tower& x, const Tower& y) {
        return x.bottom != y.bottom ? x.bottom < y.bottom : x.length < y.length;
    });
    return mod;
}

i64 reduced_rank(const UModule& m) {
    i64 r = 0;
    for (const Tower& t : m.finite) r += t.length;
    return r;
}

i64 top_reduced_degree_rel(const UModule& m) {
    if (m.finite.empty()) fail(Errc::empty_reduced, "module has no reduced part");
    i64 top = std::numeric_limits<i64>::min();
    for (const Tower& t : m.finite) top = std::max(top, t.bottom + 2 * t.length - 2);
    return top;
}

bool u_image_top_degree_check(const UModule& m) {
    const i64 top = top_reduced_degree_rel(m);
    for (const Tower& t : m.finite) {
        if (t.bottom + 2 * t.length - 2 == top && t.length != 1) return false;
    }
    return true;
}

i64 module_rank_at(const UModule& m, i64 level) {
    const i64 deg = 2 * level;
    i64 r = deg >= m.infinite_bottom ? 1 : 0;
    for (const Tower& t : m.finite) {
        if (deg >= t.bottom && deg <= t.bottom + 2 * t.length - 2) ++r;
    }
    return r;
}

i64 root_vertex_count(const GradedRoot& gr, i64 level) {
    // Vertices at height `level` = components of {leaves with value <= level}
    // after cutting at maxima above the level; one component persists above
    // every maximum.
    const auto& m = gr.minima;
    const auto& M = gr.maxima;
    i64 components = 0;
    bool connected = false;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i > 0) connected = connected && M[i - 1] <= level;
        if (m[i] <= level) {
            if (!connected) ++components;
            connected = true;
        } else {
            connected = false;
        }
    }
    return components;
}

i64 reduced_rank_from_extrema(const std::vector<i64>& minima, const std::vector<i64>& maxima) {
    i64 r = 0;
    for (i64 v : maxima) r += v;
    for (i64 v : minima) r -= v;
    return r + *std::min_element(minima.begin(), minima.end());
}

} // namespace brieskorn
