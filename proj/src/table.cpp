#include "brieskorn/table.hpp"

namespace brieskorn {

const std::vector<TableRow>& reference_table() {
    static const std::vector<TableRow> rows = {
        {{2, 3, 7}, 1, 1, {}},
        {{2, 3, 11}, 5, 1, {{5, 1}}},
        {{2, 3, 13}, 7, 2, {{5, 0}, {7, 1}}},
        {{2, 3, 17}, 11, 2, {{5, 1}, {7, 0}, {11, 1}}},
        {{2, 5, 7}, 11, 2, {{3, 0}, {11, 1}}},
        {{2, 5, 9}, 17, 2, {{7, 1}, {11, 0}, {13, 0}, {17, 1}}},
        {{3, 4, 5}, 13, 2, {{2, 0}, {7, 0}, {11, 0}, {13, 1}}},
        {{3, 4, 7}, 23, 2, {{2, 1}, {5, 0}, {11, 1}, {13, 0}, {17, 0}, {19, 0}, {23, 1}}},
    };
    return rows;
}

i64 quotient_rank_any(const Exponents& a, i64 p) {
    if (a.index_divisible_by(p) < 0) return hf_red_rank(a, p);
    return hf_red_rank(branched_pair(a, p).base, 1);
}

std::vector<TableDiff> reference_table_diff() {
    std::vector<TableDiff> out;
    for (const TableRow& want : reference_table()) {
        TableDiff diff;
        diff.expected = want;
        const Exponents e = Exponents::of({want.a[0], want.a[1], want.a[2]});
        diff.computed.a = want.a;
        diff.computed.N = bound_N_i64(e);
        diff.computed.rank = hf_red_rank(e, 1);
        for (const auto& [p, unused] : want.quotient_ranks)
            diff.computed.quotient_ranks.emplace_back(p, quotient_rank_any(e, p));
        diff.match = diff.computed.N == want.N && diff.computed.rank == want.rank &&
                     diff.computed.quotient_ranks == want.quotient_ranks;
        out.push_back(std::move(diff));
    }
    return out;
}

} // namespace brieskorn
