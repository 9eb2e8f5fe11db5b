#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cutpoly/adm.hpp"
#include "cutpoly/cutmodel.hpp"
#include "cutpoly/dualdesc.hpp"
#include "cutpoly/graphs.hpp"
#include "cutpoly/groups.hpp"

namespace py = pybind11;
using namespace cutpoly;

namespace {

py::object to_py(const BigInt& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

py::object to_py(const Rational& x) {
  return py::module_::import("fractions").attr("Fraction")(x.get_num().get_str() + "/" + x.get_den().get_str());
}

Mode parse_mode(const std::string& s) {
  if (s == "polytope") return Mode::kPolytope;
  if (s == "cone") return Mode::kCone;
  throw py::value_error("mode must be 'polytope' or 'cone'");
}

// (a0, [a...]) as a flat list [a0, a1, ...]
py::list ineq_to_py(const AffineInequality& q) {
  py::list out;
  out.append(q.a0);
  for (auto v : q.a) out.append(v);
  return out;
}

AffineInequality ineq_from_py(const std::vector<std::int64_t>& flat) {
  if (flat.empty()) throw py::value_error("inequality needs at least a0");
  AffineInequality q;
  q.a0 = flat[0];
  q.a.assign(flat.begin() + 1, flat.end());
  return q;
}

py::list ineqs_to_py(const std::vector<AffineInequality>& rows) {
  py::list out;
  for (const auto& q : rows) out.append(ineq_to_py(q));
  return out;
}

py::dict graph_info(const std::string& spec, const std::string& mode) {
  const Graph g = parse_graph_spec(spec);
  const auto action = restricted_group(g, parse_mode(mode));
  py::dict d;
  d["vertices"] = g.num_vertices();
  d["edges"] = g.num_edges();
  py::list edges;
  for (const auto& e : g.edges()) edges.append(py::make_tuple(e.u, e.v));
  d["edge_list"] = edges;
  d["aut_order"] = to_py(action.aut_order);
  d["restricted_order"] = to_py(action.point_action.order());
  d["k5_minor"] = has_k5_minor(g);
  return d;
}

py::dict enumerate_facets(const std::string& spec, const std::string& mode, const std::string& method,
                          const std::string& termination, unsigned workers, std::uint64_t seed, bool expand) {
  const CutPolytope c(parse_graph_spec(spec), parse_mode(mode));
  const auto action = restricted_group(c);
  AdmResult r;
  {
    py::gil_scoped_release release;
    if (method == "adm") {
      AdmConfig cfg;
      cfg.termination = parse_termination(termination);
      cfg.workers = workers;
      cfg.seed = seed;
      r = adjacency_decomposition(c, cfg);
    } else if (method == "dd") {
      std::vector<AffineInequality> rows;
      for (const auto& f : dual_description(VPolytope::from_cut_polytope(c))) {
        rows.push_back(c.to_inequality(f.functional));
        rows.back().normalize();
      }
      std::sort(rows.begin(), rows.end());
      r = group_into_orbits(c, action, rows);
      r.criterion = "dd";
    } else if (method == "k5free") {
      if (c.mode() != Mode::kPolytope) throw ModelError("k5free needs mode 'polytope'");
      r = group_into_orbits(c, action, k5free_facets(c.graph()));
      r.criterion = "k5free";
    } else {
      throw py::value_error("method must be 'adm', 'dd' or 'k5free'");
    }
  }
  py::dict d;
  d["total_facets"] = to_py(r.total_facets);
  d["group_order"] = to_py(r.group_order);
  d["criterion"] = r.criterion;
  py::list orbits;
  for (const auto& rec : r.records) {
    py::dict o;
    o["representative"] = ineq_to_py(c.to_inequality(rec.representative.functional));
    o["orbit_size"] = to_py(rec.orbit_size);
    o["incidence"] = rec.incidence_count;
    orbits.append(o);
  }
  d["orbits"] = orbits;
  if (expand) d["facets"] = ineqs_to_py(expand_orbits(c, action, r.records));
  return d;
}

py::list cuts(const std::string& spec) {
  py::list out;
  for (const auto& u : enumerate_cuts(parse_graph_spec(spec))) out.append(py::cast(u.coords));
  return out;
}

py::list metric_vertices(int n, const std::string& mode) {
  const Mode m = parse_mode(mode);
  const auto rows = metric_generators(n, m);
  std::vector<QVector> verts;
  {
    py::gil_scoped_release release;
    verts = enumerate_vertices(rows, static_cast<std::size_t>(n) * (n - 1) / 2, m);
  }
  py::list out;
  for (const auto& v : verts) {
    py::list row;
    for (const auto& x : v) row.append(to_py(x));
    out.append(row);
  }
  return out;
}

bool is_facet_of(const std::string& spec, const std::string& mode, const std::vector<std::int64_t>& flat) {
  const CutPolytope c(parse_graph_spec(spec), parse_mode(mode));
  auto q = ineq_from_py(flat);
  if (q.a.size() != c.dimension()) throw py::value_error("inequality has the wrong length");
  if (c.mode() == Mode::kCone && q.a0 != 0) return false;
  return is_facet(VPolytope::from_cut_polytope(c), c.to_functional(q)).ok();
}

py::dict triangle_adjacency(const std::string& spec) {
  const CutPolytope c(parse_graph_spec(spec), Mode::kPolytope);
  AdmConfig cfg;
  cfg.record_neighbors = true;
  const auto r = adjacency_decomposition(c, cfg);
  const auto t = check_triangle_adjacency(c, r.records);
  py::dict d;
  d["holds"] = t.holds;
  d["orbits"] = r.records.size();
  std::size_t witnessed = 0;
  for (const auto& w : t.witnesses) witnessed += w.triangle_key.has_value();
  d["witnessed"] = witnessed;
  return d;
}

py::dict sample(const std::string& spec, std::size_t steps, std::uint64_t seed) {
  const CutPolytope c(parse_graph_spec(spec), Mode::kPolytope);
  SampleConfig cfg;
  cfg.steps = steps;
  cfg.seed = seed;
  SampleResult s;
  {
    py::gil_scoped_release release;
    s = sample_facets(c, cfg);
  }
  py::dict d;
  d["histogram"] = py::cast(s.histogram);
  d["distinct_keys"] = s.distinct_keys;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Facet enumeration of cut polytopes of graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("graph_info", &graph_info, py::arg("graph"), py::arg("mode") = "polytope");
  m.def("enumerate_facets", &enumerate_facets, py::arg("graph"), py::arg("mode") = "polytope",
        py::arg("method") = "adm", py::arg("termination") = "exhaustive", py::arg("workers") = 1u,
        py::arg("seed") = 0u, py::arg("expand") = false,
        "Facet orbits; inequalities are [a0, a1, ...] meaning a0 + a.x >= 0.");
  m.def("cuts", &cuts, py::arg("graph"), "Cut vectors in cut-index order.");
  m.def("triangle_inequalities", [](const std::string& spec) { return ineqs_to_py(triangle_inequalities(parse_graph_spec(spec))); },
        py::arg("graph"));
  m.def("k5free_facets",
        [](const std::string& spec, bool override_minor_check) {
          return ineqs_to_py(k5free_facets(parse_graph_spec(spec), override_minor_check));
        },
        py::arg("graph"), py::arg("override_minor_check") = false);
  m.def("k5free_count",
        [](const std::string& spec, bool override_minor_check) {
          return to_py(k5free_count(parse_graph_spec(spec), override_minor_check));
        },
        py::arg("graph"), py::arg("override_minor_check") = false);
  m.def("metric_inequalities", [](int n, const std::string& mode) { return ineqs_to_py(metric_generators(n, parse_mode(mode))); },
        py::arg("n"), py::arg("mode") = "polytope");
  m.def("metric_vertices", &metric_vertices, py::arg("n"), py::arg("mode") = "polytope");
  m.def("is_facet", &is_facet_of, py::arg("graph"), py::arg("mode"), py::arg("inequality"));
  m.def("triangle_adjacency", &triangle_adjacency, py::arg("graph"));
  m.def("sample", &sample, py::arg("graph"), py::arg("steps") = 1000, py::arg("seed") = 1);
}
