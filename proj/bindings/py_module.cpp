// Python bindings. Structured results come back as plain dicts/lists built
// from the same serializers the CLI uses, so the two surfaces always agree.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brieskorn/report.hpp"

namespace py = pybind11;
namespace bk = brieskorn;

namespace {

py::object json_to_py(const bk::Json& j) {
    switch (j.type()) {
        case bk::Json::value_t::null: return py::none();
        case bk::Json::value_t::boolean: return py::bool_(j.get<bool>());
        case bk::Json::value_t::number_integer: return py::int_(j.get<long long>());
        case bk::Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case bk::Json::value_t::number_float: return py::float_(j.get<double>());
        case bk::Json::value_t::string: return py::str(j.get<std::string>());
        case bk::Json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case bk::Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

py::int_ big_to_py(const bk::Zint& z) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(bk::zstr(z)));
}

bk::Exponents exps(const std::vector<long long>& a) { return bk::Exponents::of(a); }

bk::Scenario scenario_from(const std::string& s) {
    if (s == "rational-ball") return bk::Scenario::connected_sum_rational_ball;
    if (s == "positive-definite") return bk::Scenario::connected_sum_positive_definite;
    bk::fail(bk::Errc::unsupported_scenario, "scenario must be rational-ball or positive-definite");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact invariants of Brieskorn homology spheres";

    py::register_exception<bk::Error>(m, "BrieskornError");

    m.def("seifert_data",
          [](const std::vector<long long>& a) { return json_to_py(bk::to_json(bk::brieskorn_seifert_data(exps(a)))); },
          py::arg("exponents"), "Euler term and Seifert pairs of Sigma(a_1..a_r)");

    m.def("bound_n",
          [](const std::vector<long long>& a) { return big_to_py(bk::bound_N(exps(a))); },
          py::arg("exponents"), "(r-2)*A - sum A/a_j");

    m.def("kappa", &bk::kappa, py::arg("a"), py::arg("b"), py::arg("c"),
          "size of the semigroup slice G cap [0, N]");
    m.def("lattice_count_tau1", &bk::lattice_count_tau1, py::arg("a"), py::arg("b"), py::arg("c"),
          "lattice-point count; always equals kappa");
    m.def("unique_representation",
          [](long long n, long long a, long long b, long long c) {
              const bk::Digits d = bk::unique_representation(n, a, b, c);
              return py::make_tuple(d.i, d.j, d.k);
          },
          py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"),
          "digits (i, j, k) with n = bc*i + ac*j + ab*k, i < a, j < b, k < c");
    m.def("delta_at",
          [](const std::vector<long long>& a, long long p, long long n) {
              return bk::delta_at(bk::brieskorn_seifert_data(exps(a)), p, n);
          },
          py::arg("exponents"), py::arg("p"), py::arg("n"));
    m.def("delta_via_semigroup", py::overload_cast<long long, long long, long long, long long>(&bk::delta_via_semigroup),
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"));
    m.def("min_tau",
          [](const std::vector<long long>& a, long long p) {
              return bk::min_tau(bk::tau_profile(bk::brieskorn_seifert_data(exps(a)), p));
          },
          py::arg("exponents"), py::arg("p") = 1);
    m.def("classify_maxima",
          [](const std::vector<long long>& a) {
              const auto mc = bk::classify_maxima(bk::tau_profile(bk::brieskorn_seifert_data(exps(a)), 1));
              py::dict d;
              d["max_value"] = mc.max_value;
              d["all_trivial"] = mc.all_trivial;
              d["witness"] = mc.witness ? py::object(py::int_(*mc.witness)) : py::object(py::none());
              return d;
          },
          py::arg("exponents"), "trivial-maximum scan; r = 3, not (2,3,5)");
    m.def("casson", &bk::casson, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("d_invariant_minus", &bk::d_invariant_minus, py::arg("a"), py::arg("b"), py::arg("c"),
          "d-invariant of the reversed orientation (even)");
    m.def("sigma_equivariant", &bk::sigma_equivariant, py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("hf_red_rank",
          [](const std::vector<long long>& a, long long p) { return bk::hf_red_rank(exps(a), p); },
          py::arg("exponents"), py::arg("p") = 1,
          "rank of the reduced Floer homology; p > 1 gives the free quotient");

    m.def("delta_inf_minus_delta",
          [](const std::vector<long long>& a, long long p) { return bk::delta_inf_minus_delta_free(exps(a), p); },
          py::arg("exponents"), py::arg("p"));

    m.def("delta_inf", &bk::delta_inf_free_absolute, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("p"));

    m.def("branched_bound",
          [](const std::vector<long long>& a, long long p) { return bk::branched_bound(bk::branched_pair(exps(a), p)); },
          py::arg("exponents"), py::arg("p"), "rank(Y) - p*rank(Y/Z_p)");

    m.def("torus_knot",
          [](long long a, long long b, long long c) { return json_to_py(bk::to_json(bk::torus_knot_report(a, b, c))); },
          py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("invariant_report",
          [](const std::vector<long long>& a) { return json_to_py(bk::to_json(bk::invariant_report(exps(a)))); },
          py::arg("exponents"));

    m.def("tau_profile",
          [](const std::vector<long long>& a, long long p) {
              return json_to_py(bk::to_json(bk::tau_profile(bk::brieskorn_seifert_data(exps(a)), p)));
          },
          py::arg("exponents"), py::arg("p") = 1);

    m.def("graded_root",
          [](const std::vector<long long>& a, long long p) {
              const auto tp = bk::tau_profile(bk::brieskorn_seifert_data(exps(a)), p);
              const auto gr = bk::build_root(tp);
              bk::Json j = bk::to_json(gr);
              j["module"] = bk::to_json(bk::tower_decomposition(gr));
              return json_to_py(j);
          },
          py::arg("exponents"), py::arg("p") = 1);

    m.def("graded_root_dot",
          [](const std::vector<long long>& a, long long p) {
              return bk::to_dot(bk::build_root(bk::tau_profile(bk::brieskorn_seifert_data(exps(a)), p)));
          },
          py::arg("exponents"), py::arg("p") = 1);

    m.def("free_rational_ball_verdict",
          [](const std::vector<long long>& a, long long m_order) {
              return json_to_py(bk::to_json(bk::free_rational_ball_verdict(exps(a), m_order)));
          },
          py::arg("exponents"), py::arg("m"));

    m.def("branched_rational_ball_verdict",
          [](const std::vector<long long>& a, long long p) {
              return json_to_py(bk::to_json(bk::branched_rational_ball_verdict(bk::branched_pair(exps(a), p))));
          },
          py::arg("exponents"), py::arg("p"));

    m.def("positive_definite_verdict",
          [](long long a, long long b, long long c, long long p) {
              return json_to_py(bk::to_json(bk::positive_definite_verdict(a, b, c, p)));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p"));

    m.def("connected_sum_verdict",
          [](const std::vector<std::vector<long long>>& summands, long long p, const std::string& scenario) {
              std::vector<bk::Exponents> es;
              es.reserve(summands.size());
              for (const auto& s : summands) es.push_back(exps(s));
              return json_to_py(bk::to_json(bk::connected_sum_verdict(es, p, scenario_from(scenario))));
          },
          py::arg("summands"), py::arg("p"), py::arg("scenario"));

    m.def("reference_table", [] {
        bk::Json rows = bk::Json::array();
        for (const auto& d : bk::reference_table_diff()) rows.push_back(bk::to_json(d));
        return json_to_py(rows);
    });

    m.def("scan",
          [](const std::vector<std::string>& checks, long long max_product, long long prime_lo,
             long long prime_hi, int workers) {
              bk::SweepOptions opt;
              opt.max_product = max_product;
              opt.prime_lo = prime_lo;
              opt.prime_hi = prime_hi;
              opt.workers = workers;
              bk::Json arr = bk::Json::array();
              for (const auto& r : bk::run_checks(checks, opt)) arr.push_back(bk::to_json(r));
              return json_to_py(arr);
          },
          py::arg("checks") = std::vector<std::string>{"all"}, py::arg("max_product") = 10000,
          py::arg("prime_lo") = 2, py::arg("prime_hi") = 37, py::arg("workers") = 0);
}
