#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "edlab/bipanpositionable.hpp"
#include "edlab/certify.hpp"
#include "edlab/claims.hpp"
#include "edlab/closed_sets.hpp"
#include "edlab/distance.hpp"
#include "edlab/game.hpp"
#include "edlab/graph.hpp"
#include "edlab/json_io.hpp"
#include "edlab/oracle.hpp"
#include "edlab/path_table.hpp"
#include "edlab/predict.hpp"

namespace py = pybind11;
using nlohmann::ordered_json;

namespace {

// The python surface returns plain dicts/lists in exactly the JSON shapes the
// CLI prints, so there is one schema to document instead of two.
py::object to_py(const ordered_json& j) {
  switch (j.type()) {
    case nlohmann::detail::value_t::null:
      return py::none();
    case nlohmann::detail::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::detail::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::detail::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::detail::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::detail::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::detail::value_t::array: {
      py::list out;
      for (const auto& el : j) out.append(to_py(el));
      return out;
    }
    case nlohmann::detail::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_py(it.value());
      return out;
    }
    default:
      throw edlab::InternalError("unserializable json value");
  }
}

edlab::VertexSet make_set(int universe, const std::vector<int>& vs) {
  return edlab::VertexSet::from_vector(universe, vs);
}

edlab::Variant variant_arg(const std::string& v) { return edlab::parse_variant(v); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "explorer-director game engine";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const edlab::InvalidParameter& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const edlab::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const edlab::UnsupportedInput& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const edlab::InvalidGraph& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const edlab::Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  py::class_<edlab::Graph>(m, "Graph")
      .def_static("from_spec", &edlab::graph_from_spec, py::arg("spec"),
                  "build a family graph from a spec like 'cycle:9'")
      .def_static(
          "from_edge_list",
          [](const std::string& text) { return edlab::parse_edge_list(text); },
          py::arg("text"))
      .def_property_readonly("n", &edlab::Graph::n)
      .def_property_readonly("edge_count", &edlab::Graph::edge_count)
      .def("neighbors", &edlab::Graph::neighbors, py::arg("v"))
      .def("edges", &edlab::Graph::edges)
      .def("serialize", [](const edlab::Graph& g) { return edlab::serialize_edge_list(g); })
      .def("__repr__", [](const edlab::Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "solve",
      [](const edlab::Graph& g, const std::string& variant, int start,
         std::uint64_t state_budget, std::uint64_t node_budget, double time_budget,
         bool trace) {
        edlab::SolveOptions so;
        so.state_budget = state_budget;
        so.search_node_budget = node_budget;
        so.time_budget_seconds = time_budget;
        so.want_trace = trace;
        return to_py(edlab::to_json(edlab::solve_game(g, variant_arg(variant), start, so)));
      },
      py::arg("graph"), py::arg("variant") = "distance", py::arg("start") = 0,
      py::arg("state_budget") = 50'000'000, py::arg("node_budget") = 100'000'000,
      py::arg("time_budget") = 0.0, py::arg("trace") = false,
      "exact game value from a start vertex; returns the SolveResult dict");

  m.def(
      "min_closed",
      [](const edlab::Graph& g, const std::string& variant, std::optional<int> anchor,
         bool symmetry, std::uint64_t node_budget, double time_budget) {
        edlab::MinSetOptions mo;
        mo.node_budget = node_budget;
        mo.time_budget_seconds = time_budget;
        if (anchor) mo.anchor = *anchor;
        if (symmetry) mo.symmetry = edlab::Symmetry::hypercube;
        auto out = variant_arg(variant) == edlab::Variant::distance
                       ? edlab::min_closed_set(g, mo)
                       : edlab::min_path_closed_set(g, mo);
        return to_py(edlab::to_json(out));
      },
      py::arg("graph"), py::arg("variant") = "distance", py::arg("anchor") = py::none(),
      py::arg("symmetry") = false, py::arg("node_budget") = 100'000'000,
      py::arg("time_budget") = 0.0,
      "minimum (path-)closed set; returns the SearchOutcome dict");

  m.def(
      "game_bounds",
      [](const edlab::Graph& g, const std::string& variant, int start,
         std::uint64_t node_budget) {
        edlab::GameBounds b = edlab::game_bounds(g, variant_arg(variant), start, node_budget);
        py::dict out;
        out["lower"] = b.lower;
        out["upper"] = b.upper;
        out["lower_is_heuristic"] = b.lower_is_heuristic;
        out["upper_witness"] = b.upper_witness.to_vector();
        return out;
      },
      py::arg("graph"), py::arg("variant") = "distance", py::arg("start") = 0,
      py::arg("node_budget") = 100'000'000);

  m.def(
      "is_closed",
      [](const edlab::Graph& g, const std::vector<int>& vs) {
        return edlab::is_closed(edlab::all_pairs_distances(g), make_set(g.n(), vs));
      },
      py::arg("graph"), py::arg("vertices"));

  m.def(
      "is_path_closed",
      [](const edlab::Graph& g, const std::vector<int>& vs) {
        return edlab::is_path_closed(edlab::build_path_length_table(g), make_set(g.n(), vs));
      },
      py::arg("graph"), py::arg("vertices"));

  m.def(
      "bipanpositionable",
      [](const edlab::Graph& g, long long node_budget, int workers) {
        edlab::BipanOptions bo;
        bo.node_budget = node_budget;
        bo.workers = workers;
        return to_py(edlab::to_json(edlab::check_bipanpositionable(g, bo)));
      },
      py::arg("graph"), py::arg("node_budget") = 10'000'000, py::arg("workers") = 1,
      "returns the BipanReport dict with verdict yes/no/budget-exceeded");

  m.def("predict_cycle_fd", &edlab::predict_cycle_fd, py::arg("n"));
  m.def("hypercube_known_table", [] {
    py::dict out;
    for (const auto& [k, v] : edlab::hypercube_known_table()) out[py::int_(k)] = v;
    return out;
  });
  m.def(
      "hypercube_bounds",
      [](int n) {
        edlab::HypercubeBounds b = edlab::hypercube_bounds(n);
        py::dict out;
        out["lower"] = b.lower;
        out["upper"] = b.upper;
        out["lower_source"] = b.lower_source;
        out["upper_source"] = b.upper_source;
        return out;
      },
      py::arg("n"));
  m.def(
      "predict_cf",
      [](int n, int start, const std::string& variant) {
        return edlab::predict_cf(n, start, variant_arg(variant));
      },
      py::arg("n"), py::arg("start"), py::arg("variant") = "distance");

  m.def(
      "isometric_cycle_set",
      [](int k) { return edlab::build_isometric_cycle_set(k).to_vector(); }, py::arg("k"));
  m.def(
      "doubling_set",
      [](const std::vector<int>& vs, int n, int x) {
        return edlab::build_doubling_set(make_set(1 << x, vs), n, x).to_vector();
      },
      py::arg("vertices"), py::arg("n"), py::arg("x"));
  m.def(
      "cf_certificates",
      [](int n, const std::string& variant) {
        py::list out;
        for (const auto& c : edlab::build_cf_certificates(n, variant_arg(variant))) {
          py::dict d;
          d["name"] = c.name;
          d["vertices"] = c.set.to_vector();
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("variant") = "path");

  m.def(
      "verify_paper",
      [](const std::string& scope, int workers, std::uint64_t node_budget,
         std::uint64_t state_budget, double time_budget, bool progress) {
        edlab::VerifyOptions vo;
        if (scope == "full")
          vo.scope = edlab::Scope::full;
        else if (scope != "quick")
          throw edlab::InvalidParameter("scope must be quick or full");
        vo.workers = workers;
        vo.node_budget = node_budget;
        vo.state_budget = state_budget;
        vo.time_budget_seconds = time_budget;
        vo.progress = progress;
        return to_py(edlab::verify_paper(vo).to_json());
      },
      py::arg("scope") = "quick", py::arg("workers") = 1,
      py::arg("node_budget") = 100'000'000, py::arg("state_budget") = 50'000'000,
      py::arg("time_budget") = 0.0, py::arg("progress") = false,
      "run the claim suite; returns the report as a list of claim dicts");

  m.attr("__version__") = "0.1.0";
}
