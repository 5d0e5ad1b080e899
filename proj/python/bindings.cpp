#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "planepaths/construct_three.hpp"
#include "planepaths/construct_two.hpp"
#include "planepaths/generators.hpp"
#include "planepaths/io.hpp"
#include "planepaths/oracle.hpp"

namespace py = pybind11;
using namespace planepaths;

namespace {

using Coords = std::vector<std::pair<std::int64_t, std::int64_t>>;

PointSet to_set(const Coords& c) {
  std::vector<Point> pts;
  pts.reserve(c.size());
  for (const auto& [x, y] : c) pts.push_back({x, y});
  return PointSet::validate(std::move(pts));
}

Coords to_coords(const PointSet& S) {
  Coords out;
  for (const Point& p : S.points()) out.emplace_back(p.x, p.y);
  return out;
}

py::dict report_dict(const PointSet& S, const std::vector<PathSeq>& paths) {
  const auto r = verify_paths(S, paths);
  std::vector<bool> plane, spanning;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    plane.push_back(r.plane(i));
    spanning.push_back(r.spanning(i));
  }
  py::dict d;
  d["ok"] = r.ok();
  d["plane"] = plane;
  d["spanning"] = spanning;
  d["edge_disjoint"] = r.edge_disjoint();
  d["summary"] = r.summary();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Edge-disjoint plane spanning paths";

  py::register_exception<Error>(m, "InputError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("validate", [](const Coords& c) { return to_coords(to_set(c)); }, py::arg("points"));
  m.def("convex_hull", [](const Coords& c) { return convex_hull(to_set(c)); }, py::arg("points"));
  m.def("generate",
        [](const std::string& kind, std::size_t n, std::uint64_t seed) {
          return to_coords(generate(parse_gen_kind(kind), n, seed));
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 0);

  m.def("three_paths",
        [](const Coords& c) {
          const auto S = to_set(c);
          const auto r = three_paths(S);
          py::dict d;
          d["paths"] = r.paths;
          d["route"] = r.route;
          d["witness"] = witness_json(r).dump();
          return d;
        },
        py::arg("points"));

  m.def("two_paths",
        [](const Coords& c, Index s, Index t) {
          const auto S = to_set(c);
          const auto r = two_paths_prescribed(S, s, t);
          py::dict d;
          d["p"] = r.p;
          d["q"] = r.q;
          d["case_tag"] = std::string(case_name(r.case_tag));
          return d;
        },
        py::arg("points"), py::arg("s"), py::arg("t"));

  m.def("structural_search",
        [](const Coords& c) { return witness_json(structural_search(to_set(c))).dump(); },
        py::arg("points"));
  m.def("is_wheel", [](const Coords& c) { return is_wheel(to_set(c)); }, py::arg("points"));
  m.def("wheel_paths", [](const Coords& c, Index center) { return wheel_paths(to_set(c), center); },
        py::arg("points"), py::arg("center"));

  m.def("verify",
        [](const Coords& c, const std::vector<PathSeq>& paths) { return report_dict(to_set(c), paths); },
        py::arg("points"), py::arg("paths"));

  m.def("find_paths",
        [](const Coords& c, std::size_t k, std::uint64_t budget) {
          SearchConfig cfg;
          cfg.k = k;
          cfg.max_nodes = budget;
          cfg.allow_large = true;
          const auto r = find_k_disjoint_paths(to_set(c), cfg);
          return py::make_tuple(status_name(r.status), r.paths, r.nodes);
        },
        py::arg("points"), py::arg("k") = 3, py::arg("budget") = 50'000'000);
  m.def("max_disjoint_paths",
        [](const Coords& c, std::uint64_t budget) {
          const auto r = max_disjoint_paths(to_set(c), budget);
          return py::make_tuple(r.k, r.definitive);
        },
        py::arg("points"), py::arg("budget") = 50'000'000);

  m.def("render_svg",
        [](const Coords& c, const std::vector<PathSeq>& paths, bool hull) {
          SvgOptions opt;
          opt.show_hull = hull;
          return render_svg(to_set(c), paths, opt);
        },
        py::arg("points"), py::arg("paths") = std::vector<PathSeq>{}, py::arg("hull") = false);
}
