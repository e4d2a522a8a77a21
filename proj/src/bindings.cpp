#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gha/approx.hpp"
#include "gha/error.hpp"
#include "gha/exact.hpp"
#include "gha/gadgets.hpp"
#include "gha/random_graphs.hpp"
#include "gha/repunit.hpp"

namespace py = pybind11;
using namespace gha;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(to_decimal(x))); }

std::vector<BigInt> from_py(const py::iterable& values) {
  std::vector<BigInt> out;
  for (const auto& v : values) out.push_back(parse_bigint(py::str(v).cast<std::string>()));
  return out;
}

Instance make(int n, const std::vector<Edge>& edges, const py::iterable& values) {
  return Instance(Graph(n, edges), HouseValues(from_py(values)));
}

LayoutStrategy strategy(const std::string& name) {
  if (name == "bfs") return LayoutStrategy::BfsOrder;
  if (name == "dfs") return LayoutStrategy::DfsOrder;
  if (name == "tree") return LayoutStrategy::TreeTrickleOrder;
  if (name == "exact") return LayoutStrategy::ExactSmall;
  throw Error(ErrorKind::BadParameters, "unknown layout strategy '" + name + "'");
}

py::dict approx_dict(const ApproxResult& r) {
  py::dict d;
  d["assignment"] = r.allocation.assignment;
  d["achieved_envy"] = to_py(r.certificate.achieved_envy);
  d["guarantee_bound"] = to_py(r.certificate.guarantee_bound);
  d["bound_name"] = std::string(bound_name_string(r.certificate.bound_name));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graphical house allocation: exact solvers, approximations and gadgets";

  static PyObject* gha_error = py::exception<Error>(m, "GhaError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(gha_error, (std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "envy",
      [](int n, const std::vector<Edge>& edges, const py::iterable& values, const std::vector<int>& assignment) {
        return to_py(envy(make(n, edges, values), Allocation{assignment}));
      },
      py::arg("n"), py::arg("edges"), py::arg("values"), py::arg("assignment"));

  m.def(
      "solve_exact",
      [](int n, const std::vector<Edge>& edges, const py::iterable& values, const std::string& method, int cap) {
        const Instance inst = make(n, edges, values);
        ExactResult r;
        {
          py::gil_scoped_release release;
          r = method == "bruteforce" ? solve_exact_bruteforce(inst, cap > 0 ? cap : kBruteforceCap)
                                     : solve_exact_dp(inst, cap > 0 ? cap : kDefaultDpCap);
        }
        py::dict d;
        d["optimal_envy"] = to_py(r.optimal_envy);
        d["assignment"] = r.witness.assignment;
        d["states_explored"] = r.states_explored;
        return d;
      },
      py::arg("n"), py::arg("edges"), py::arg("values"), py::arg("method") = "dp", py::arg("cap") = 0);

  m.def(
      "trickle_down",
      [](int n, const std::vector<Edge>& edges, const py::iterable& values) {
        const Instance inst = make(n, edges, values);
        return approx_dict(trickle_down(inst.graph, inst.houses));
      },
      py::arg("n"), py::arg("edges"), py::arg("values"));

  m.def(
      "layout_allocation",
      [](int n, const std::vector<Edge>& edges, const py::iterable& values, const std::string& layout) {
        const Instance inst = make(n, edges, values);
        return approx_dict(layout_allocation(inst, heuristic_layout(inst.graph, strategy(layout))));
      },
      py::arg("n"), py::arg("edges"), py::arg("values"), py::arg("layout") = "bfs");

  m.def(
      "inorder_allocation",
      [](int depth, const py::iterable& values) {
        const HouseValues h(from_py(values));
        py::dict d = approx_dict(inorder_allocation(depth, h));
        d["lower_bound"] = to_py(inorder_lower_bound(depth, h));
        return d;
      },
      py::arg("depth"), py::arg("values"));

  m.def(
      "elegance",
      [](std::int64_t value) {
        const EleganceRecord r = elegance(value);
        return py::make_tuple(r.elegance, r.witness.terms);
      },
      py::arg("m"));
  m.def("runs", [](std::uint64_t i) { return runs(i); }, py::arg("i"));
  m.def("delta_complete_binary", &delta_complete_binary, py::arg("depth"), py::arg("i"));

  m.def(
      "generate",
      [](const std::string& family, const std::vector<std::int64_t>& items, std::int64_t T, std::int64_t C,
         std::uint64_t seed, bool desk_scale) {
        ThreePartitionInstance tp{items, static_cast<int>(items.size() / 3), T};
        GadgetInstance g;
        switch (parse_family(family)) {
          case GadgetFamily::Depth2: g = gen_depth2_tree(tp, C); break;
          case GadgetFamily::Clique: g = gen_clique(tp, C); break;
          case GadgetFamily::Grid: g = gen_grid(tp, C); break;
          case GadgetFamily::Expander: g = gen_expander(tp, C, seed); break;
          case GadgetFamily::BoundedTree: {
            BoundedTreeOptions opts;
            opts.desk_scale = desk_scale;
            g = gen_bounded_tree_instance(tp, opts);
            break;
          }
        }
        py::dict d;
        d["n"] = g.instance.n();
        d["edges"] = std::vector<Edge>(g.instance.graph.edges().begin(), g.instance.graph.edges().end());
        py::list values;
        for (const auto& v : g.instance.houses.values()) values.append(to_py(v));
        d["values"] = values;
        d["roles"] = g.roles;
        d["yes_bound"] = to_py(yes_bound(g));
        if (auto w = find_witness(tp)) d["yes_assignment"] = yes_allocation(g, *w).assignment;
        return d;
      },
      py::arg("family"), py::arg("items"), py::arg("T"), py::arg("C") = 1, py::arg("seed") = 1,
      py::arg("desk_scale") = false);

  m.def(
      "sample_gnp_half",
      [](int n, std::uint64_t seed) {
        const Graph g = sample_gnp_half(n, seed);
        return std::vector<Edge>(g.edges().begin(), g.edges().end());
      },
      py::arg("n"), py::arg("seed"));

  m.def(
      "concentration_check",
      [](int n, std::uint64_t seed, std::uint64_t samples) {
        ConcentrationReport r;
        {
          py::gil_scoped_release release;
          r = concentration_check(sample_gnp_half(n, seed), concentration_epsilon(n), samples, seed);
        }
        py::dict d;
        d["epsilon"] = r.epsilon;
        d["samples"] = r.samples;
        d["violations"] = r.violations;
        d["worst_low_ratio"] = boost::rational_cast<double>(r.worst_low_ratio);
        d["worst_high_ratio"] = boost::rational_cast<double>(r.worst_high_ratio);
        return d;
      },
      py::arg("n"), py::arg("seed"), py::arg("samples") = 10000);
}
