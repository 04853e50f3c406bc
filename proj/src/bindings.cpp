#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superpoly/coloring.hpp"
#include "superpoly/io.hpp"
#include "superpoly/oracles.hpp"
#include "superpoly/render.hpp"
#include "superpoly/setcover.hpp"
#include "superpoly/solver.hpp"

namespace py = pybind11;
using namespace superpoly;

namespace {

using PyOffset = std::pair<int, int>;

Offset to_offset(const PyOffset& o) { return {o.first, o.second}; }
PyOffset from_offset(Offset o) { return {o.dx, o.dy}; }

py::dict cluster_to_dict(const CellCluster& cells) {
  py::dict out;
  for (const auto& [c, color] : cells)
    out[py::make_tuple(c.x, c.y)] = static_cast<int>(color);
  return out;
}

CellCluster dict_to_cluster(const py::dict& d) {
  CellCluster cells;
  for (const auto& item : d) {
    auto key = item.first.cast<std::pair<int, int>>();
    cells[{key.first, key.second}] = static_cast<ColorId>(item.second.cast<int>());
  }
  return cells;
}

std::vector<PyOffset> layout_to_py(const Layout& lay) {
  std::vector<PyOffset> out;
  out.reserve(lay.size());
  for (Offset o : lay) out.push_back(from_offset(o));
  return out;
}

Layout layout_from_py(const std::vector<PyOffset>& lay) {
  Layout out;
  out.reserve(lay.size());
  for (const auto& o : lay) out.push_back(to_offset(o));
  return out;
}

py::dict result_to_dict(const SolveResult& res) {
  py::dict out;
  out["layout"] = layout_to_py(res.layout);
  out["size"] = res.size;
  out["optimal"] = res.optimal;
  out["nodes"] = res.stats.nodes;
  out["elapsed_seconds"] = res.stats.elapsed_seconds;
  out["timed_out"] = res.stats.timed_out;
  out["steiner_cells"] = res.stats.steiner_cells;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "colored polyomino toolkit";

  py::register_exception<Error>(m, "SuperpolyError");

  py::class_<Polyomino>(m, "Polyomino")
      .def("size", &Polyomino::size)
      .def("width", &Polyomino::width)
      .def("height", &Polyomino::height)
      .def("color_at", [](const Polyomino& p, int x, int y) { return p.color_at(x, y); })
      .def("cells",
           [](const Polyomino& p) {
             py::dict out;
             for (const auto& [c, color] : p.cells())
               out[py::make_tuple(c.x, c.y)] = static_cast<int>(color);
             return out;
           })
      .def("__eq__", [](const Polyomino& a, const Polyomino& b) { return a == b; })
      .def("__repr__", [](const Polyomino& p) { return emit_polyomino(p); });

  m.def("make_polyomino", [](const py::dict& cells) { return make_polyomino(dict_to_cluster(cells)); });
  m.def("parse_polyomino", [](const std::string& text) { return parse_polyomino(text); });
  m.def("emit_polyomino", &emit_polyomino);
  m.def("translate", [](const Polyomino& p, const PyOffset& o) {
    return cluster_to_dict(translate(p, to_offset(o)));
  });
  m.def("compatible", [](const Polyomino& pu, const Polyomino& pv, const PyOffset& o) {
    return compatible(pu, pv, to_offset(o));
  });
  m.def("superimpose", [](const Polyomino& pu, const Polyomino& pv, const PyOffset& o) {
    return cluster_to_dict(superimpose(pu, pv, to_offset(o)));
  });
  m.def("is_superpolyomino", [](const Polyomino& container, const Polyomino& piece) {
    std::vector<PyOffset> out;
    for (Offset o : is_superpolyomino(container, piece)) out.push_back(from_offset(o));
    return out;
  });
  m.def("max_overlap", [](const Polyomino& pu, const Polyomino& pv) {
    auto [o, count] = max_overlap(pu, pv);
    return py::make_tuple(from_offset(o), count);
  });

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const std::vector<std::pair<std::string, Polyomino>>& pieces) {
        return Instance(pieces);
      }))
      .def("piece_count", &Instance::piece_count)
      .def("name", &Instance::name)
      .def("piece", &Instance::piece, py::return_value_policy::reference_internal)
      .def_readonly("total_cells", &Instance::total_cells);

  m.def("evaluate_layout", [](const Instance& inst, const std::vector<PyOffset>& lay) {
    return evaluate_layout(inst, layout_from_py(lay));
  });
  m.def(
      "solve_exact",
      [](const Instance& inst, const std::string& mode, int window, double time_limit,
         int workers, bool filter_subshapes) {
        SolverConfig cfg;
        if (mode == "contact")
          cfg.mode = SolveMode::ExactContact;
        else if (mode == "steiner")
          cfg.mode = SolveMode::ExactSteiner;
        else
          throw PreconditionViolatedError("mode must be contact or steiner");
        cfg.window = window;
        cfg.time_limit_seconds = time_limit;
        cfg.workers = workers;
        cfg.filter_subshapes = filter_subshapes;
        return result_to_dict(solve_exact(inst, cfg));
      },
      py::arg("instance"), py::arg("mode") = "contact", py::arg("window") = 0,
      py::arg("time_limit") = 0.0, py::arg("workers") = 1,
      py::arg("filter_subshapes") = true);
  m.def(
      "solve_brute",
      [](const Instance& inst, int window) { return result_to_dict(solve_brute(inst, window)); },
      py::arg("instance"), py::arg("window") = 0);
  m.def("solve_greedy",
        [](const Instance& inst) { return result_to_dict(solve_greedy(inst)); });
  m.def("subshape_filter", &subshape_filter);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<int, int>>>())
      .def_readonly("n", &Graph::n)
      .def_readonly("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree);

  py::class_<ColoringInstance>(m, "ColoringInstance")
      .def_readonly("instance", &ColoringInstance::instance)
      .def_readonly("graph", &ColoringInstance::graph);

  m.def("build_vertex_polyomino", &build_vertex_polyomino);
  m.def("build_coloring_instance", &build_coloring_instance);
  m.def("deck_layout", [](const ColoringInstance& ci, const std::vector<std::vector<int>>& parts) {
    return layout_to_py(deck_layout(ci, parts));
  });
  m.def("deck_solve", [](const ColoringInstance& ci) { return result_to_dict(deck_solve(ci)); });
  m.def("extract_coloring", [](const ColoringInstance& ci, const std::vector<PyOffset>& lay) {
    return extract_coloring(ci, layout_from_py(lay));
  });
  m.def("threshold_k", &threshold_k);
  m.def(
      "to_two_color", [](const Polyomino& p) { return to_two_color(p); }, py::arg("p"));
  m.def(
      "from_two_color", [](const Polyomino& p) { return from_two_color(p); }, py::arg("p"));

  py::class_<SetCoverInstance>(m, "SetCoverInstance")
      .def(py::init<int, std::vector<std::vector<int>>>())
      .def_readonly("n", &SetCoverInstance::n)
      .def_readonly("sets", &SetCoverInstance::sets)
      .def("m", &SetCoverInstance::m)
      .def("contains", &SetCoverInstance::contains);

  m.def("build_element_polyomino",
        [](int n, int i) { return build_element_polyomino(n, i).poly; });
  m.def("build_set_polyomino", [](const SetCoverInstance& sc) {
    return build_set_polyomino(sc).poly;
  });
  m.def("build_setcover_instance", &build_setcover_instance);
  m.def("aligned_layout", [](const SetCoverInstance& sc, const std::vector<int>& assignment) {
    return layout_to_py(aligned_layout(sc, assignment));
  });
  m.def("aligned_solve", [](const SetCoverInstance& sc) {
    auto [res, cover] = aligned_solve(sc);
    return py::make_tuple(result_to_dict(res), cover);
  });
  m.def("extract_cover", [](const SetCoverInstance& sc, const std::vector<PyOffset>& lay) {
    return extract_cover(sc, layout_from_py(lay));
  });
  m.def("misalignment_size", [](const SetCoverInstance& sc, int element, const PyOffset& o) {
    return misalignment_size(sc, element, to_offset(o));
  });

  m.def("chromatic_number", [](const Graph& g) {
    ColoringWitness w = chromatic_number(g);
    return py::make_tuple(w.k, w.classes);
  });
  m.def("min_set_cover", [](const SetCoverInstance& sc) {
    CoverWitness w = min_set_cover(sc);
    return py::make_tuple(w.k, w.sets);
  });
  m.def("vertex_poly_size", &vertex_poly_size);
  m.def("element_poly_size", &element_poly_size);
  m.def("set_poly_size", &set_poly_size);

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("emit_graph", &emit_graph);
  m.def("parse_setcover", [](const std::string& text) { return parse_setcover(text); });
  m.def("emit_setcover", &emit_setcover);
  m.def("parse_instance", [](const std::string& text) {
    InstanceFile file = parse_instance(text);
    const char* kind = file.provenance.kind == Provenance::Kind::Coloring    ? "coloring"
                       : file.provenance.kind == Provenance::Kind::SetCover ? "setcover"
                                                                             : "none";
    return py::make_tuple(file.instance, kind, file.provenance.two_color);
  });
  m.def(
      "emit_instance", [](const Instance& inst) { return emit_instance(inst); },
      py::arg("instance"));
  m.def("parse_layout", [](const std::string& text, const Instance& inst) {
    return layout_to_py(parse_layout(text, inst));
  });
  m.def("emit_layout", [](const Instance& inst, const std::vector<PyOffset>& lay) {
    return emit_layout(inst, layout_from_py(lay));
  });

  m.def(
      "render_svg", [](const Polyomino& p, const std::string& id) { return render_svg(p, id); },
      py::arg("p"), py::arg("id") = "piece");
  m.def("render_svg_instance",
        [](const Instance& inst) { return render_svg(inst); });
}
