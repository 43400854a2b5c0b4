#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ramsey/bounds.hpp"
#include "ramsey/cli.hpp"
#include "ramsey/concentration.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/search.hpp"

namespace py = pybind11;
using namespace ramsey;

namespace {

ProgressionKind kind_of(const std::string& name, int param) {
  if (name == "ap" || name == "arithmetic") return ProgressionKind::arithmetic();
  return ProgressionKind::from_name(name, param);
}

py::object to_py(const BigInt& x) { return py::module_::import("builtins").attr("int")(x.str()); }

py::object to_py(const Rational& x) {
  return py::module_::import("fractions").attr("Fraction")(x.str());
}

py::object bound_to_py(const BoundValue& b) {
  return std::visit(
      [](const auto& v) -> py::object {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Approx>) return py::float_(v.value);
        else if constexpr (std::is_same_v<T, TowerExpr>) return py::str(v.to_string());
        else return to_py(v);
      },
      b.value);
}

py::dict report_to_py(const ExperimentReport& r) {
  py::dict d;
  d["name"] = r.name;
  py::dict params, extras;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  for (const auto& [k, v] : r.extras) extras[py::str(k)] = v;
  d["params"] = params;
  d["samples"] = r.samples;
  d["estimate"] = r.estimate;
  d["std_error"] = r.std_error;
  d["bound"] = r.bound_value;
  d["passed"] = r.passed;
  d["extras"] = extras;
  return d;
}

RandomGraph graph_of(int n, const std::vector<std::pair<int, int>>& edges) {
  RandomGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact search, bounds, counting and Monte-Carlo checks for progression colorings";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NotApplicable>(m, "NotApplicable", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<SearchIncomplete>(m, "SearchIncomplete", PyExc_RuntimeError);

  m.def(
      "ramsey_number",
      [](const std::string& kind, int param, int k, int max_n, int threads,
         std::uint64_t node_budget) {
        SearchConfig cfg;
        cfg.kind = kind_of(kind, param);
        cfg.k = k;
        cfg.max_n = max_n;
        cfg.threads = threads;
        cfg.parallel_width = threads > 1 ? std::min(10, max_n - 1) : 0;
        cfg.node_budget = node_budget;
        RamseyResult r;
        {
          py::gil_scoped_release release;
          r = ramsey_number(cfg);
        }
        py::dict d;
        d["value"] = r.value;
        d["witness"] = r.witness.coloring.to_string();
        d["nodes"] = r.nodes_explored;
        return d;
      },
      py::arg("kind"), py::arg("param") = 0, py::arg("k") = 3, py::arg("max_n") = 64,
      py::arg("threads") = 1, py::arg("node_budget") = 1'000'000'000ULL);

  m.def(
      "exists_good_coloring",
      [](int n, const std::string& kind, int param, int k) -> std::optional<std::string> {
        const auto c = exists_good_coloring(n, kind_of(kind, param), k);
        if (!c) return std::nullopt;
        return c->to_string();
      },
      py::arg("n"), py::arg("kind"), py::arg("param") = 0, py::arg("k") = 3);

  m.def(
      "find_monochromatic",
      [](const std::string& coloring, const std::string& kind, int param,
         int k) -> std::optional<std::vector<int>> {
        const auto p = find_monochromatic(Coloring::parse(coloring), kind_of(kind, param), k);
        if (!p) return std::nullopt;
        return p->terms;
      },
      py::arg("coloring"), py::arg("kind"), py::arg("param") = 0, py::arg("k") = 3);

  m.def(
      "is_progression",
      [](const std::vector<int>& terms, const std::string& kind, int param) {
        return is_progression(terms, kind_of(kind, param));
      },
      py::arg("terms"), py::arg("kind"), py::arg("param") = 0);

  m.def("vdw_lower_primes", [](int p, int q) { return bound_to_py(vdw_lower_primes(p, q)); });
  m.def("vdw_lower_probabilistic", [](int k) { return bound_to_py(vdw_lower_probabilistic(k)); });
  m.def("gowers_upper", [](int k, int r) { return gowers_upper(k, r).to_string(); });
  m.def("sp_upper", [](int mm, int k) { return bound_to_py(sp_upper(mm, k)); });
  m.def("sp_lower_constructive",
        [](int mm, int k) { return bound_to_py(sp_lower_constructive(mm, k)); });
  m.def("sp_lower_probabilistic",
        [](int mm, int k) { return bound_to_py(sp_lower_probabilistic(mm, k)); });
  m.def("q_exact", [](int i, int mm, int r) {
    const QExact q = q_exact(i, mm, r);
    return py::make_tuple(q.k, q.diameter, bound_to_py(q.value));
  });
  m.def("q1_vijay_beta", [] { return q1_vijay_beta().beta; });
  m.def("q1_new_base", [] { return q1_new_base().g; });

  m.def(
      "count_T",
      [](int n, const std::string& kind, int param, int k, int a, int d) {
        return count_T(n, kind_of(kind, param), k, a, d);
      },
      py::arg("n"), py::arg("kind"), py::arg("param"), py::arg("k"), py::arg("a"), py::arg("d"));
  m.def(
      "union_bound_check",
      [](int n, const std::string& kind, int param, int k) {
        const CountReport r = union_bound_check(n, kind_of(kind, param), k);
        py::dict d;
        d["S"] = r.S;
        d["sum_T"] = r.sum_T;
        d["max_T"] = r.max_T;
        d["union_bound"] = to_py(r.union_bound);
        d["chain_holds"] = r.chain_holds();
        d["argmax_at_origin"] = r.argmax_at_origin;
        return d;
      },
      py::arg("n"), py::arg("kind"), py::arg("param"), py::arg("k"));
  m.def("lambda_vector", [](int k) {
    const LambdaVector v = lambda_vector(k);
    return py::make_tuple(to_py(v.v0), to_py(v.v1));
  });
  m.def("dominant_eigenvalue", &dominant_eigenvalue, py::arg("iterations") = 64);

  m.def("chromatic_number", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return chromatic_number(graph_of(n, edges));
  });
  m.def("clique_number", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return clique_number(graph_of(n, edges));
  });
  m.def("lis_length", [](const std::vector<double>& x) { return lis_length(x); });

  m.def(
      "janson_triangle",
      [](int n, double c, std::uint64_t samples, std::uint64_t seed, int threads) {
        return report_to_py(run_janson_triangle(n, c, samples, seed, threads));
      },
      py::arg("n"), py::arg("c"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);
  m.def(
      "chebyshev_threepoint",
      [](double p, double a, std::uint64_t samples, std::uint64_t seed, int threads) {
        return report_to_py(run_chebyshev_threepoint(p, a, samples, seed, threads));
      },
      py::arg("p"), py::arg("a"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);
  m.def(
      "chernoff_coinflip",
      [](int n, double lam, std::uint64_t samples, std::uint64_t seed, int threads) {
        return report_to_py(run_chernoff_coinflip(n, lam, samples, seed, threads));
      },
      py::arg("n"), py::arg("lam"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
