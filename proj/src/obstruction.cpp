#include "brieskorn/obstruction.hpp"

#include <sstream>

namespace brieskorn {

namespace {

std::string tuple_str(const std::vector<i64>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

const char* kCaveatH2 = "requires the certifying prime p to not divide |H^2(W;Z)|";
const char* kCaveatHomTrivial = "requires the extension to act homologically trivially on W";
const char* kCaveatB1 = "requires b_1(W) = 0";

bool is_sorted_tuple(const Exponents& a, std::initializer_list<i64> t) {
    return std::vector<i64>(t) == a.sorted();
}

Certificate rank_gap_certificate(const Exponents& a, i64 p, i64 r1, i64 rp) {
    Certificate c;
    c.criterion = "free quotient rank gap";
    c.values = {{"p", zint_of(p)},
                {"rank_manifold", zint_of(r1)},
                {"rank_quotient", zint_of(rp)},
                {"rank_difference", zint_of(r1 - rp)}};
    std::ostringstream os;
    os << "delta_inf - delta = rank(Y) - rank(Y/Z_" << p << ") = " << r1 << " - " << rp << " = "
       << (r1 - rp) << " > 0 for Y = Sigma" << tuple_str(a.sorted());
    c.inequality = os.str();
    return c;
}

} // namespace

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::free_rational_ball: return "free-rational-ball";
        case Scenario::branched_rational_ball: return "branched-rational-ball";
        case Scenario::positive_definite: return "positive-definite";
        case Scenario::connected_sum_rational_ball: return "connected-sum-rational-ball";
        case Scenario::connected_sum_positive_definite: return "connected-sum-positive-definite";
    }
    return "unknown";
}

ObstructionVerdict free_rational_ball_verdict(const Exponents& a, i64 m) {
    if (m <= 1) fail(Errc::out_of_range, "group order must exceed 1");
    for (i64 v : a.sorted()) {
        if (gcd_ll(m, v) != 1)
            fail(Errc::unsupported_scenario,
                 "Z_" + std::to_string(m) + " does not act freely on Sigma" + tuple_str(a.sorted()) +
                     "; use the branched scenario");
    }

    ObstructionVerdict verdict;
    verdict.scenario = Scenario::free_rational_ball;
    verdict.caveats = {kCaveatH2};

    const i64 r1 = hf_red_rank(a, 1);
    for (i64 p : prime_factors(m)) {
        const i64 rp = hf_red_rank(a, p);
        if (r1 > rp) {
            verdict.obstructed = true;
            verdict.certificates.push_back(rank_gap_certificate(a, p, r1, rp));
            return verdict;
        }
    }

    // Rank equality happens only for Sigma(2,3,5) and Sigma(2,3,11) with
    // p = 5; both have delta = 1 and so bound no rational homology ball at
    // all, independent of the action.
    if (is_sorted_tuple(a, {2, 3, 5}) || is_sorted_tuple(a, {2, 3, 11})) {
        const auto& v = a.sorted();
        const i64 delta_sigma = -d_invariant_minus(v[0], v[1], v[2]) / 2;
        if (delta_sigma != 0) {
            verdict.obstructed = true;
            Certificate c;
            c.criterion = "nonzero d-invariant";
            c.values = {{"delta", zint_of(delta_sigma)}};
            std::ostringstream os;
            os << "delta(Sigma" << tuple_str(a.sorted()) << ") = " << delta_sigma
               << " != 0, so no rational homology ball bounds it";
            c.inequality = os.str();
            verdict.certificates.push_back(std::move(c));
            verdict.caveats.clear(); // no hypothesis on the action needed
            return verdict;
        }
    }
    verdict.obstructed = false;
    return verdict;
}

ObstructionVerdict branched_rational_ball_verdict(const BranchedPair& bp) {
    ObstructionVerdict verdict;
    verdict.scenario = Scenario::branched_rational_ball;
    verdict.caveats = {kCaveatH2};

    const i64 rank_total = hf_red_rank(bp.total, 1);
    const i64 rank_base = hf_red_rank(bp.base, 1);
    const i64 bound = rank_total - bp.p * rank_base;
    if (bound < 0) fail(Errc::negative_bound, "rank(Y) < p*rank(Y_0)");

    if (bound > 0) {
        verdict.obstructed = true;
        Certificate c;
        c.criterion = "branched rank gap";
        c.values = {{"p", zint_of(bp.p)},
                    {"rank_total", zint_of(rank_total)},
                    {"rank_base", zint_of(rank_base)},
                    {"bound", zint_of(bound)}};
        std::ostringstream os;
        os << "rank(Y) - p*rank(Y_0) = " << rank_total << " - " << bp.p << "*" << rank_base << " = "
           << bound << " > 0 for Y = Sigma" << tuple_str(bp.total.sorted());
        c.inequality = os.str();
        verdict.certificates.push_back(std::move(c));
    } else {
        verdict.obstructed = false;
        const auto& t = bp.total.sorted();
        if (bp.p == 5 && t.size() == 3 && t[0] == 2 && t[1] == 3 && t[2] % 30 == 5 && t[2] >= 35) {
            verdict.notes.push_back("equality family: Sigma(2,3,30n+5) with p = 5 has rank = 5*rank(base)");
        }
    }
    return verdict;
}

ObstructionVerdict positive_definite_verdict(i64 a, i64 b, i64 c, i64 p) {
    const Exponents e = Exponents::of({a, b, c});
    if (!is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");

    ObstructionVerdict verdict;
    verdict.scenario = Scenario::positive_definite;
    verdict.caveats = {kCaveatHomTrivial, kCaveatB1};

    const bool free_action = (a % p != 0 && b % p != 0 && c % p != 0);
    if (free_action) {
        const i64 dinf = delta_inf_free_absolute(a, b, c, p);
        if (dinf > 0) {
            verdict.obstructed = true;
            Certificate cert;
            cert.criterion = "positive equivariant delta (free)";
            cert.values = {{"p", zint_of(p)}, {"delta_inf", zint_of(dinf)}};
            std::ostringstream os;
            os << "delta_inf^(" << p << ")(Sigma" << tuple_str(e.sorted()) << ") = " << dinf
               << " > 0 obstructs positive-definite fillings";
            cert.inequality = os.str();
            verdict.certificates.push_back(std::move(cert));
        }
        return verdict;
    }

    // Branched chain: delta_inf(-Y) <= delta(-Y) - (rank(Y) - p*rank(Y_0)),
    // so a negative right-hand side certifies delta_inf(-Y) < 0.
    BranchedPair bp;
    try {
        bp = branched_pair(e, p);
    } catch (const Error& err) {
        if (err.code() == Errc::degenerate_base) {
            verdict.obstructed = false;
            verdict.notes.push_back(std::string("branched quotient degenerates: ") + err.what());
            return verdict;
        }
        throw;
    }
    const i64 bound = branched_bound(bp);
    const i64 delta_minus = d_invariant_minus(a, b, c) / 2;
    if (delta_minus - bound < 0) {
        verdict.obstructed = true;
        Certificate cert;
        cert.criterion = "negative equivariant delta (branched)";
        cert.values = {{"p", zint_of(p)},
                       {"delta_minus", zint_of(delta_minus)},
                       {"bound", zint_of(bound)}};
        std::ostringstream os;
        os << "delta_inf(-Y) <= delta(-Y) - bound = " << delta_minus << " - " << bound << " = "
           << (delta_minus - bound) << " < 0 for Y = Sigma" << tuple_str(e.sorted());
        cert.inequality = os.str();
        verdict.certificates.push_back(std::move(cert));
    }
    return verdict;
}

ObstructionVerdict connected_sum_verdict(const std::vector<Exponents>& summands, i64 p,
                                         Scenario which) {
    if (summands.empty()) fail(Errc::out_of_range, "need at least one summand");
    if (!is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");
    if (which != Scenario::connected_sum_rational_ball &&
        which != Scenario::connected_sum_positive_definite)
        fail(Errc::unsupported_scenario, "connected-sum verdicts cover the rational-ball and positive-definite scenarios");

    for (const Exponents& s : summands) {
        if (s.index_divisible_by(p) < 0)
            fail(Errc::action_free_on_summand,
                 "Z_" + std::to_string(p) + " acts freely on Sigma" + tuple_str(s.sorted()));
    }

    ObstructionVerdict verdict;
    verdict.scenario = which;
    verdict.caveats = (which == Scenario::connected_sum_rational_ball)
                          ? std::vector<std::string>{kCaveatH2}
                          : std::vector<std::string>{kCaveatHomTrivial, kCaveatB1,
                                                     "uses additivity of the d-invariant under connected sum"};

    i64 total_bound = 0;
    i64 delta_sum = 0;
    for (const Exponents& s : summands) {
        i64 bound = 0;
        bool degenerate = false;
        try {
            bound = branched_bound(branched_pair(s, p));
        } catch (const Error& err) {
            if (err.code() != Errc::degenerate_base) throw;
            degenerate = true;
            verdict.notes.push_back("summand Sigma" + tuple_str(s.sorted()) +
                                    ": branched quotient degenerates; its bound is taken as 0");
        }
        total_bound += bound;

        if (which == Scenario::connected_sum_rational_ball && bound > 0) {
            verdict.obstructed = true;
            Certificate c;
            c.criterion = "branched rank gap on a summand";
            c.values = {{"p", zint_of(p)}, {"bound", zint_of(bound)}};
            std::ostringstream os;
            os << "rank(Y_i) - p*rank(Y_i/Z_" << p << ") = " << bound << " > 0 for Y_i = Sigma"
               << tuple_str(s.sorted());
            c.inequality = os.str();
            verdict.certificates.push_back(std::move(c));
        }
        if (which == Scenario::connected_sum_positive_definite) {
            if (s.count() != 3)
                fail(Errc::unsupported_scenario,
                     "positive-definite connected sums need r = 3 summands (absolute delta)");
            const auto& v = s.sorted();
            delta_sum += -d_invariant_minus(v[0], v[1], v[2]) / 2;
            (void)degenerate;
        }
    }

    if (which == Scenario::connected_sum_positive_definite && delta_sum + total_bound > 0) {
        verdict.obstructed = true;
        Certificate c;
        c.criterion = "positive-definite connected-sum bound";
        c.values = {{"p", zint_of(p)},
                    {"delta_sum", zint_of(delta_sum)},
                    {"bound_sum", zint_of(total_bound)}};
        std::ostringstream os;
        os << "delta(Y) + sum_i (rank(Y_i) - p*rank(Y_i/Z_p)) = " << delta_sum << " + " << total_bound
           << " > 0";
        c.inequality = os.str();
        verdict.certificates.push_back(std::move(c));
    }
    return verdict;
}

} // namespace brieskorn
