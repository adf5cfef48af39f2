#include "brieskorn/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "brieskorn/sweep.hpp"

namespace brieskorn {

namespace {

constexpr i64 kJsonExactMax = (1LL << 53);

} // namespace

Json json_int(i64 v) {
    if (v > kJsonExactMax || v < -kJsonExactMax) return Json(std::to_string(v));
    return Json(v);
}

Json json_int(const Zint& z) {
    if (fits_i64(z)) return json_int(static_cast<i64>(z.get_si()));
    return Json(zstr(z));
}

Json to_json(const SeifertData& sd) {
    Json j;
    j["exponents"] = sd.a.display();
    j["e0"] = json_int(sd.e0);
    Json pairs = Json::array();
    const auto& sorted = sd.a.sorted();
    for (size_t i = 0; i < sorted.size(); ++i) pairs.push_back({json_int(sorted[i]), json_int(sd.b[i])});
    j["pairs"] = std::move(pairs);
    j["product"] = json_int(sd.A);
    return j;
}

Json to_json(const QuotientSeifert& q) {
    Json j;
    j["p"] = json_int(q.p);
    j["e0"] = json_int(q.e0p);
    Json pairs = Json::array();
    for (const auto& [alpha, omega] : q.pairs) pairs.push_back({json_int(alpha), json_int(omega)});
    j["pairs"] = std::move(pairs);
    return j;
}

Json to_json(const TauProfile& tp) {
    Json j;
    j["p"] = json_int(tp.p);
    j["N"] = json_int(tp.N);
    j["domain_end"] = json_int(tp.domain_end);
    j["delta"] = tp.delta;
    j["tau"] = Json::array();
    for (i64 v : tp.tau) j["tau"].push_back(json_int(v));
    return j;
}

Json to_json(const GradedRoot& gr) {
    Json j;
    Json alt = Json::array();
    for (size_t i = 0; i < gr.minima.size(); ++i) {
        if (i > 0) alt.push_back(json_int(gr.maxima[i - 1]));
        alt.push_back(json_int(gr.minima[i]));
    }
    j["extrema"] = std::move(alt);
    j["minima"] = gr.minima;
    j["maxima"] = gr.maxima;
    j["leaf_positions"] = gr.min_pos;
    return j;
}

Json to_json(const UModule& m) {
    Json j;
    j["infinite_tower_bottom"] = json_int(m.infinite_bottom);
    Json towers = Json::array();
    for (const Tower& t : m.finite) {
        Json tw;
        tw["bottom"] = json_int(t.bottom);
        tw["length"] = json_int(t.length);
        towers.push_back(std::move(tw));
    }
    j["finite_towers"] = std::move(towers);
    j["reduced_rank"] = json_int(reduced_rank(m));
    return j;
}

Json to_json(const InvariantReport& rep) {
    Json j;
    j["exponents"] = rep.exponents;
    j["N"] = json_int(rep.N);
    auto opt = [](const std::optional<i64>& v) { return v ? json_int(*v) : Json(nullptr); };
    j["kappa"] = opt(rep.kappa);
    j["casson_lambda"] = opt(rep.casson_lambda);
    j["d_minus"] = opt(rep.d_minus);
    j["delta_minus"] = rep.d_minus ? json_int(*rep.d_minus / 2) : Json(nullptr);
    j["delta_sigma"] = opt(rep.delta_sigma);
    j["hf_red_rank"] = json_int(rep.hf_red_rank);
    j["ell_plus_minus"] = opt(rep.ell_plus);
    j["min_tau"] = json_int(rep.min_tau);
    j["orientation"] = "kappa, d_minus, ell_plus_minus, min_tau refer to -Y; casson_lambda, delta_sigma to Y";
    return j;
}

Json to_json(const TorusKnotReport& rep) {
    Json j;
    j["a"] = json_int(rep.a);
    j["b"] = json_int(rep.b);
    j["c"] = json_int(rep.c);
    j["kappa"] = json_int(rep.kappa);
    j["sigma_c"] = json_int(rep.sigma_c);
    j["j_inv"] = json_int(rep.j_inv);
    j["theta"] = rep.theta.is_integer() ? json_int(rep.theta.num) : Json(rep.theta.str());
    return j;
}

Json to_json(const ObstructionVerdict& v) {
    Json j;
    j["scenario"] = scenario_name(v.scenario);
    j["conclusion"] = v.obstructed ? "obstructed" : "not-obstructed-by-these-criteria";
    Json certs = Json::array();
    for (const Certificate& c : v.certificates) {
        Json jc;
        jc["criterion"] = c.criterion;
        Json values;
        for (const auto& [k, val] : c.values) values[k] = json_int(val);
        jc["values"] = std::move(values);
        jc["inequality"] = c.inequality;
        certs.push_back(std::move(jc));
    }
    j["certificates"] = std::move(certs);
    j["caveats"] = v.caveats;
    j["notes"] = v.notes;
    return j;
}

Json to_json(const TableDiff& diff) {
    auto row_json = [](const TableRow& r) {
        Json j;
        j["exponents"] = r.a;
        j["N"] = json_int(r.N);
        j["rank"] = json_int(r.rank);
        Json q = Json::array();
        for (const auto& [p, rk] : r.quotient_ranks) {
            Json e;
            e["p"] = json_int(p);
            e["rank"] = json_int(rk);
            q.push_back(std::move(e));
        }
        j["quotients"] = std::move(q);
        return j;
    };
    Json j;
    j["expected"] = row_json(diff.expected);
    j["computed"] = row_json(diff.computed);
    j["match"] = diff.match;
    return j;
}

Json to_json(const CheckResult& res) {
    Json j;
    j["check"] = res.name;
    j["cases"] = json_int(res.cases_checked);
    j["violations"] = json_int(res.total_violations);
    Json v = Json::array();
    for (const Violation& viol : res.violations) {
        Json e;
        e["check"] = viol.check;
        e["detail"] = viol.detail;
        v.push_back(std::move(e));
    }
    j["examples"] = std::move(v);
    j["pass"] = res.passed();
    return j;
}

std::string to_dot(const GradedRoot& gr) {
    const size_t k = gr.minima.size();
    std::ostringstream os;
    os << "digraph graded_root {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle, fontsize=10];\n";
    for (size_t i = 0; i < k; ++i)
        os << "  leaf" << i << " [label=\"" << gr.minima[i] << "\", shape=doublecircle];\n";
    for (size_t i = 0; i + 1 < k; ++i)
        os << "  merge" << i << " [label=\"" << gr.maxima[i] << "\"];\n";

    // Merge bottom-up: lowest maximum first, ties leftmost. Each maximum
    // joins the components on its two sides; edges run child -> parent.
    std::vector<size_t> order(k > 0 ? k - 1 : 0);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return gr.maxima[x] < gr.maxima[y]; });
    std::vector<size_t> comp(k);  // union-find over leaf indices
    std::iota(comp.begin(), comp.end(), size_t{0});
    std::function<size_t(size_t)> find = [&](size_t x) {
        return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    std::vector<std::string> root_node(k);
    for (size_t i = 0; i < k; ++i) root_node[i] = "leaf" + std::to_string(i);
    for (size_t m : order) {
        const size_t left = find(m);
        const size_t right = find(m + 1);
        os << "  " << root_node[left] << " -> merge" << m << ";\n";
        os << "  " << root_node[right] << " -> merge" << m << ";\n";
        comp[right] = left;
        root_node[left] = "merge" + std::to_string(m);
    }
    os << "}\n";
    return os.str();
}

} // namespace brieskorn
