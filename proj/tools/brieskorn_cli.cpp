// Command-line surface: single-manifold invariant reports, free-quotient and
// branched-cover comparisons, torus-knot concordance values, the reference
// table diff, bulk property scans and graded-root export.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "brieskorn/report.hpp"
#include "brieskorn/sweep.hpp"

namespace bk = brieskorn;
using bk::i64;
using bk::Json;

namespace {

constexpr const char* kSchemaVersion = "1";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitCheckFailed = 3;

struct Output {
    bool json = false;
    std::string path; // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) bk::fail(bk::Errc::out_of_range, "cannot open output file " + path);
        f << text;
    }
};

Json record(const std::string& command, Json inputs, Json result) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    return j;
}

std::string dumps(const Json& j) { return j.dump(2) + "\n"; }

std::string verdict_text(const bk::ObstructionVerdict& v) {
    std::ostringstream os;
    os << "verdict: " << (v.obstructed ? "obstructed" : "not-obstructed-by-these-criteria") << "\n";
    for (const auto& c : v.certificates) os << "  certificate: " << c.inequality << "\n";
    for (const auto& s : v.caveats) os << "  caveat: " << s << "\n";
    for (const auto& s : v.notes) os << "  note: " << s << "\n";
    return os.str();
}

int cmd_invariants(const std::vector<i64>& exps, const Output& out) {
    const bk::Exponents e = bk::Exponents::of(exps);
    const bk::InvariantReport rep = bk::invariant_report(e);
    if (out.json) {
        out.emit(dumps(record("invariants", Json{{"exponents", exps}}, bk::to_json(rep))));
        return kExitOk;
    }
    std::ostringstream os;
    os << "Sigma" << Json(exps).dump() << "\n";
    os << "  N:            " << bk::zstr(rep.N) << "\n";
    if (rep.kappa) os << "  kappa:        " << *rep.kappa << "\n";
    if (rep.casson_lambda) os << "  lambda:       " << *rep.casson_lambda << "\n";
    if (rep.d_minus) os << "  d(-Y):        " << *rep.d_minus << "\n";
    if (rep.delta_sigma) os << "  delta(Y):     " << *rep.delta_sigma << "\n";
    os << "  rank HF_red:  " << rep.hf_red_rank << "\n";
    if (rep.ell_plus)
        os << "  ell_plus(-Y): " << *rep.ell_plus << "\n";
    else if (e.count() == 3)
        os << "  ell_plus(-Y): none (reduced part is zero)\n";
    os << "  min tau:      " << rep.min_tau << "\n";
    out.emit(os.str());
    return kExitOk;
}

int cmd_quotient(const std::vector<i64>& exps, i64 p, const Output& out) {
    const bk::Exponents e = bk::Exponents::of(exps);
    if (e.index_divisible_by(p) >= 0)
        bk::fail(bk::Errc::prime_divides_exponent,
                 std::to_string(p) + " divides an exponent; use the `branched` command");
    const bk::SeifertData sd = bk::brieskorn_seifert_data(e);
    const bk::QuotientSeifert q = bk::free_quotient_data(sd, p);
    const i64 rank = bk::hf_red_rank(e, 1);
    const i64 rank_q = bk::hf_red_rank(e, p);
    const i64 diff = rank - rank_q;

    Json res;
    res["exponents"] = exps;
    res["p"] = bk::json_int(p);
    res["quotient_seifert"] = bk::to_json(q);
    res["rank"] = bk::json_int(rank);
    res["quotient_rank"] = bk::json_int(rank_q);
    res["delta_inf_minus_delta"] = bk::json_int(diff);
    if (e.count() == 3) {
        const auto& v = e.sorted();
        res["delta_sigma"] = bk::json_int(-bk::d_invariant_minus(v[0], v[1], v[2]) / 2);
        res["delta_inf"] = bk::json_int(bk::delta_inf_free_absolute(v[0], v[1], v[2], p));
    } else {
        res["delta_sigma"] = nullptr;
        res["delta_inf"] = nullptr;
    }

    if (out.json) {
        out.emit(dumps(record("quotient", Json{{"exponents", exps}, {"prime", p}}, std::move(res))));
        return kExitOk;
    }
    std::ostringstream os;
    os << "Y = Sigma" << Json(exps).dump() << ", free Z_" << p << " quotient\n";
    os << "  rank HF_red(Y):        " << rank << "\n";
    os << "  rank HF_red(Y_0,s_0):  " << rank_q << "\n";
    os << "  delta_inf - delta:     " << diff << "\n";
    if (e.count() == 3) {
        os << "  delta(Y):              " << res["delta_sigma"] << "\n";
        os << "  delta_inf:             " << res["delta_inf"] << "\n";
    }
    out.emit(os.str());
    return kExitOk;
}

int cmd_branched(const std::vector<i64>& exps, i64 p, const Output& out) {
    const bk::Exponents e = bk::Exponents::of(exps);
    const bk::BranchedPair bp = bk::branched_pair(e, p);
    const i64 rank_total = bk::hf_red_rank(bp.total, 1);
    const i64 rank_base = bk::hf_red_rank(bp.base, 1);
    const i64 bound = bk::branched_bound(bp);
    const bk::ObstructionVerdict verdict = bk::branched_rational_ball_verdict(bp);

    Json res;
    res["total"] = exps;
    res["base"] = bp.base.sorted();
    res["p"] = bk::json_int(p);
    res["rank_total"] = bk::json_int(rank_total);
    res["rank_base"] = bk::json_int(rank_base);
    res["bound"] = bk::json_int(bound);
    res["verdict"] = bk::to_json(verdict);

    if (out.json) {
        out.emit(dumps(record("branched", Json{{"exponents", exps}, {"prime", p}}, std::move(res))));
        return kExitOk;
    }
    std::ostringstream os;
    os << "Y = Sigma" << Json(exps).dump() << " -> Y_0 = Sigma" << Json(bp.base.sorted()).dump()
       << " (Z_" << p << " branched cover)\n";
    os << "  rank HF_red(Y):    " << rank_total << "\n";
    os << "  rank HF_red(Y_0):  " << rank_base << "\n";
    os << "  rank(Y) - p*rank(Y_0) = " << bound << "\n";
    os << verdict_text(verdict);
    out.emit(os.str());
    return kExitOk;
}

int cmd_torus_knot(i64 a, i64 b, i64 c, const Output& out) {
    const bk::TorusKnotReport rep = bk::torus_knot_report(a, b, c);
    if (out.json) {
        out.emit(dumps(record("torus-knot", Json{{"a", a}, {"b", b}, {"prime", c}}, bk::to_json(rep))));
        return kExitOk;
    }
    std::ostringstream os;
    os << "T_{" << a << "," << b << "}, prime " << c << "\n";
    os << "  kappa:   " << rep.kappa << "\n";
    os << "  sigma:   " << rep.sigma_c << "\n";
    os << "  j:       " << rep.j_inv << "\n";
    os << "  theta:   " << rep.theta.str() << "\n";
    out.emit(os.str());
    return kExitOk;
}

int cmd_table1(const Output& out) {
    const std::vector<bk::TableDiff> diffs = bk::reference_table_diff();
    bool all_match = true;
    for (const auto& d : diffs) all_match = all_match && d.match;

    if (out.json) {
        Json rows = Json::array();
        for (const auto& d : diffs) rows.push_back(bk::to_json(d));
        Json res;
        res["rows"] = std::move(rows);
        res["pass"] = all_match;
        out.emit(dumps(record("table1", Json::object(), std::move(res))));
        return all_match ? kExitOk : kExitCheckFailed;
    }
    std::ostringstream os;
    for (const auto& d : diffs) {
        os << (d.match ? "PASS" : "FAIL") << "  (" << d.computed.a[0] << "," << d.computed.a[1] << ","
           << d.computed.a[2] << ")  N=" << d.computed.N << "  rank=" << d.computed.rank;
        if (!d.computed.quotient_ranks.empty()) {
            os << "  quotients:";
            for (const auto& [p, rk] : d.computed.quotient_ranks) os << " p=" << p << "->" << rk;
        }
        if (!d.match)
            os << "  (expected N=" << d.expected.N << " rank=" << d.expected.rank << ")";
        os << "\n";
    }
    os << (all_match ? "PASS" : "FAIL") << "  reference table\n";
    out.emit(os.str());
    return all_match ? kExitOk : kExitCheckFailed;
}

int cmd_scan(const std::vector<std::string>& checks, const bk::SweepOptions& opt, const Output& out) {
    const std::vector<bk::CheckResult> results = bk::run_checks(checks, opt);
    bool pass = true;
    for (const auto& r : results) pass = pass && r.passed();

    if (out.json) {
        Json inputs;
        inputs["checks"] = checks;
        inputs["max_product"] = bk::json_int(opt.max_product);
        inputs["primes"] = {bk::json_int(opt.prime_lo), bk::json_int(opt.prime_hi)};
        Json res;
        Json arr = Json::array();
        for (const auto& r : results) arr.push_back(bk::to_json(r));
        res["checks"] = std::move(arr);
        res["pass"] = pass;
        out.emit(dumps(record("scan", std::move(inputs), std::move(res))));
        return pass ? kExitOk : kExitCheckFailed;
    }
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  (cases=" << r.cases_checked
           << ", violations=" << r.total_violations << ")\n";
        for (const auto& v : r.violations) os << "    " << v.check << ": " << v.detail << "\n";
    }
    out.emit(os.str());
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_root(const std::vector<i64>& exps, i64 p, const std::string& format, const Output& out) {
    const bk::Exponents e = bk::Exponents::of(exps);
    const bk::TauProfile tp = bk::tau_profile(bk::brieskorn_seifert_data(e), p);
    const bk::GradedRoot gr = bk::build_root(tp);
    if (format == "dot") {
        out.emit(bk::to_dot(gr));
        return kExitOk;
    }
    Json res = bk::to_json(gr);
    res["module"] = bk::to_json(bk::tower_decomposition(gr));
    out.emit(dumps(record("root", Json{{"exponents", exps}, {"prime", p}}, std::move(res))));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of Brieskorn homology spheres: delta/tau sequences, graded "
                 "roots, Casson and d-invariants, torus-knot concordance values and cyclic "
                 "group action obstructions"};
    app.require_subcommand(1);

    Output out;
    bool json_flag = false, text_flag = false;
    app.add_flag("--json", json_flag, "emit a JSON record");
    app.add_flag("--text", text_flag, "emit human-readable text (default)");
    app.add_option("--output", out.path, "write output to a file instead of stdout");

    std::vector<i64> exps;
    i64 prime = 0;
    i64 knot_a = 0, knot_b = 0;
    std::string root_format = "dot";
    std::vector<std::string> checks{"all"};
    std::string primes_range = "2..37";
    bk::SweepOptions sweep_opt;

    auto* inv = app.add_subcommand("invariants", "invariant report for Sigma(a_1,...,a_r)");
    inv->add_option("exponents", exps, "pairwise coprime exponents, each > 1")->required()->expected(-3);

    auto* quo = app.add_subcommand("quotient", "free Z_p quotient: both ranks and delta_inf");
    quo->add_option("exponents", exps)->required()->expected(-3);
    quo->add_option("--prime", prime, "prime coprime to the exponents")->required();

    auto* bra = app.add_subcommand("branched", "branched Z_p quotient: ranks, bound, verdict");
    bra->add_option("exponents", exps)->required()->expected(-3);
    bra->add_option("--prime", prime, "prime dividing one exponent")->required();

    auto* tor = app.add_subcommand("torus-knot", "concordance invariants of T_{a,b} at a prime");
    tor->add_option("a", knot_a)->required();
    tor->add_option("b", knot_b)->required();
    tor->add_option("--prime", prime, "prime not dividing a*b")->required();

    app.add_subcommand("table1", "recompute the reference quotient-rank table and diff it");

    auto* scan = app.add_subcommand("scan", "bulk property checks over coprime triples");
    scan->add_option("--max-product", sweep_opt.max_product, "bound on a*b*c (default 100000)");
    scan->add_option("--primes", primes_range, "prime range LO..HI (default 2..37)");
    std::vector<std::string> check_names = bk::known_checks();
    check_names.push_back("all");
    scan->add_option("--check", checks, "kappa|symmetry|exceptions|kl|theta|all (repeatable)")
        ->check(CLI::IsMember(check_names));
    scan->add_option("--workers", sweep_opt.workers, "worker threads (default: hardware)");
    scan->add_option("--max-b", sweep_opt.max_b, "torus-knot sweep bound on b (default 12)");
    scan->add_option("--tie-cap", sweep_opt.tie_break_cap,
                     "product cap for the tie-break comparison (default 10000)");

    auto* root = app.add_subcommand("root", "export the graded root of a (scaled) tau profile");
    root->add_option("exponents", exps)->required()->expected(-3);
    root->add_option("--prime", prime, "scale p (default 1)");
    root->add_option("--format", root_format, "dot|json (default dot)")
        ->check(CLI::IsMember({"dot", "json"}));

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    out.json = json_flag && !text_flag;

    try {
        if (inv->parsed()) return cmd_invariants(exps, out);
        if (quo->parsed()) return cmd_quotient(exps, prime, out);
        if (bra->parsed()) return cmd_branched(exps, prime, out);
        if (tor->parsed()) return cmd_torus_knot(knot_a, knot_b, prime, out);
        if (app.get_subcommand("table1")->parsed()) return cmd_table1(out);
        if (scan->parsed()) {
            const auto dots = primes_range.find("..");
            if (dots == std::string::npos)
                bk::fail(bk::Errc::out_of_range, "--primes expects LO..HI");
            sweep_opt.prime_lo = std::stoll(primes_range.substr(0, dots));
            sweep_opt.prime_hi = std::stoll(primes_range.substr(dots + 2));
            return cmd_scan(checks, sweep_opt, out);
        }
        if (root->parsed()) return cmd_root(exps, prime == 0 ? 1 : prime, root_format, out);
    } catch (const bk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case bk::Errc::integrality_violation:
            case bk::Errc::parity_violation:
            case bk::Errc::negative_difference:
            case bk::Errc::negative_bound:
            case bk::Errc::cross_check_failure:
            case bk::Errc::property_violation:
                return kExitCheckFailed;
            default:
                return kExitPrecondition;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}
