#pragma once

// Non-extension verdicts: whether a cyclic group action on a Brieskorn sphere
// (or an equivariant connected sum) can extend over a rational homology ball
// or a positive-definite filling. A verdict is "obstructed" only when a
// computed inequality certifies it; "not obstructed by these criteria" never
// claims an extension exists. Hypotheses the computation cannot see (H^2
// divisibility, homological triviality, b_1 = 0) are surfaced as caveats.

#include <string>
#include <vector>

#include "brieskorn/invariants.hpp"

namespace brieskorn {

enum class Scenario {
    free_rational_ball,
    branched_rational_ball,
    positive_definite,
    connected_sum_rational_ball,
    connected_sum_positive_definite,
};

const char* scenario_name(Scenario s);

struct Certificate {
    std::string criterion;  // which inequality fired
    std::vector<std::pair<std::string, Zint>> values;
    std::string inequality; // rendered instance with the numbers in place
};

struct ObstructionVerdict {
    Scenario scenario{};
    bool obstructed = false;
    std::vector<Certificate> certificates; // nonempty iff obstructed
    std::vector<std::string> caveats;
    std::vector<std::string> notes;
};

// Free Z_m-action, m coprime to the exponent product.
ObstructionVerdict free_rational_ball_verdict(const Exponents& a, i64 m);

// Non-free prime action via the branched pair.
ObstructionVerdict branched_rational_ball_verdict(const BranchedPair& bp);

// Positive-definite filling, r = 3; free or branched depending on p.
ObstructionVerdict positive_definite_verdict(i64 a, i64 b, i64 c, i64 p);

// Equivariant connected sum; p must act non-freely on every summand.
ObstructionVerdict connected_sum_verdict(const std::vector<Exponents>& summands, i64 p,
                                         Scenario which);

} // namespace brieskorn
