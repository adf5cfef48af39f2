#pragma once

// The reference table of small triples whose free quotients were classified
// by hand: for each tuple its bound N, the rank of HF^+_red(-Y), and the
// quotient rank for each listed prime. Primes dividing an exponent refer to
// the branched quotient (the base Brieskorn sphere); the rest are free.

#include <array>

#include "brieskorn/invariants.hpp"

namespace brieskorn {

struct TableRow {
    std::array<i64, 3> a;
    i64 N = 0;
    i64 rank = 0;
    std::vector<std::pair<i64, i64>> quotient_ranks; // (p, rank)
};

const std::vector<TableRow>& reference_table();

// Quotient rank for any prime: free profile when p is coprime to the
// exponents, rank of the branched base otherwise.
i64 quotient_rank_any(const Exponents& a, i64 p);

struct TableDiff {
    TableRow expected;
    TableRow computed;
    bool match = false;
};

std::vector<TableDiff> reference_table_diff();

} // namespace brieskorn
