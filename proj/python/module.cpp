#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqtile/json_io.hpp"
#include "sqtile/svg.hpp"

namespace py = pybind11;
using namespace sqtile;

namespace {

py::object json_to_py(const Json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

Region region_from_tiling_args(const py::object& region) {
    if (py::isinstance<RectRegion>(region)) {
        return region.cast<RectRegion>();
    }
    return region.cast<WindowRegion>();
}

}  // namespace

PYBIND11_MODULE(sqtile, m) {
    m.doc() = "perfect square tilings: exact verifier, solver, sequence certificates, "
              "plane patch constructions";

    py::class_<Placement>(m, "Placement")
        .def(py::init<Int, Int, Int>(), py::arg("x"), py::arg("y"), py::arg("side"))
        .def_readwrite("x", &Placement::x)
        .def_readwrite("y", &Placement::y)
        .def_readwrite("side", &Placement::side)
        .def("__eq__", [](const Placement& a, const Placement& b) { return a == b; })
        .def("__repr__", [](const Placement& p) {
            return "Placement(x=" + std::to_string(p.x) + ", y=" + std::to_string(p.y) +
                   ", side=" + std::to_string(p.side) + ")";
        });

    py::class_<RectRegion>(m, "RectRegion")
        .def(py::init<Int, Int>(), py::arg("w"), py::arg("h"))
        .def_readwrite("w", &RectRegion::w)
        .def_readwrite("h", &RectRegion::h);

    py::class_<WindowRegion>(m, "WindowRegion")
        .def(py::init<Int, Int, Int, Int>(), py::arg("x0"), py::arg("y0"), py::arg("x1"),
             py::arg("y1"))
        .def_readwrite("x0", &WindowRegion::x0)
        .def_readwrite("y0", &WindowRegion::y0)
        .def_readwrite("x1", &WindowRegion::x1)
        .def_readwrite("y1", &WindowRegion::y1);

    py::class_<Tiling>(m, "Tiling")
        .def(py::init([](const py::object& region, std::vector<Placement> squares) {
                 return Tiling{region_from_tiling_args(region), std::move(squares)};
             }),
             py::arg("region"), py::arg("squares") = std::vector<Placement>{})
        .def_property_readonly("squares",
                               [](const Tiling& t) { return t.squares; })
        .def_property_readonly("region",
                               [](const Tiling& t) -> py::object {
                                   if (const auto* r = std::get_if<RectRegion>(&t.region)) {
                                       return py::cast(*r);
                                   }
                                   return py::cast(std::get<WindowRegion>(t.region));
                               })
        .def("to_json", [](const Tiling& t) { return tiling_to_json(t).dump(2); })
        .def("__len__", [](const Tiling& t) { return t.squares.size(); });

    py::class_<FibSeq>(m, "FibSeq")
        .def(py::init([](Int seed1, Int seed2, Int scale, std::vector<Int> prefix) {
                 return FibSeq{seed1, seed2, scale, std::move(prefix)};
             }),
             py::arg("seed1"), py::arg("seed2"), py::arg("scale") = 1,
             py::arg("prefix") = std::vector<Int>{})
        .def_readwrite("seed1", &FibSeq::seed1)
        .def_readwrite("seed2", &FibSeq::seed2)
        .def_readwrite("scale", &FibSeq::scale)
        .def_readwrite("prefix", &FibSeq::prefix)
        .def("__repr__", [](const FibSeq& s) { return seq_spec_string(s); });

    m.def("tiling_from_json", [](const std::string& text) { return tiling_from_string(text); },
          py::arg("text"));

    m.def("verify", [](const Tiling& t) { return json_to_py(report_to_json(verify(t))); },
          py::arg("tiling"), "exact-cover verification report as a dict");
    m.def("odd_census", [](const Tiling& t) {
              OddCensus c = odd_census(t);
              return py::make_tuple(c.count, c.sides);
          },
          py::arg("tiling"));
    m.def("area_identity", &area_identity, py::arg("sides"), py::arg("w"), py::arg("h"));
    m.def("scale_tiling", &scale_tiling, py::arg("tiling"), py::arg("factor"));

    m.def("terms", [](const FibSeq& s, std::size_t n) { return terms(s, n); }, py::arg("seq"),
          py::arg("n"));
    m.def("scale_seq", &scale_seq, py::arg("seq"), py::arg("k"));
    m.def("seq_a", &seq_a);
    m.def("seq_b", &seq_b);
    m.def("seq_c", &seq_c);
    m.def("parse_seq_spec", [](const std::string& s) { return parse_seq_spec(s); },
          py::arg("spec"));

    m.def("pairwise_disjoint",
          [](const std::vector<std::pair<std::string, FibSeq>>& labeled, Int horizon) {
              std::vector<LabeledSeq> seqs;
              seqs.reserve(labeled.size());
              for (const auto& [label, seq] : labeled) {
                  seqs.push_back(LabeledSeq{label, seq});
              }
              DisjointnessResult r = pairwise_disjoint(seqs, horizon);
              if (const auto* cert = std::get_if<DisjointnessCertificate>(&r)) {
                  return json_to_py(certificate_to_json(*cert));
              }
              return json_to_py(counterexample_to_json(std::get<Counterexample>(r), seqs));
          },
          py::arg("sequences"), py::arg("horizon") = 16,
          "certificate or counterexample as a dict; sequences are (label, FibSeq) pairs");

    m.def("golden_ratio_filter",
          [](const std::vector<Int>& sides) -> py::object {
              auto idx = golden_ratio_filter(sides);
              if (idx) {
                  return py::int_(*idx);
              }
              return py::none();
          },
          py::arg("sides"));

    m.def("solve",
          [](const std::vector<Int>& sides, Int w, Int h, std::uint64_t budget) {
              SolveOptions options;
              options.node_budget = budget;
              SolveResult r = solve(make_square_set(sides), w, h, options);
              py::dict d;
              switch (r.status) {
                  case SolveStatus::found:
                      d["status"] = "found";
                      break;
                  case SolveStatus::no_solution:
                      d["status"] = "no_solution";
                      break;
                  case SolveStatus::area_mismatch:
                      d["status"] = "area_mismatch";
                      break;
                  case SolveStatus::budget_exhausted:
                      d["status"] = "budget_exhausted";
                      break;
              }
              d["nodes"] = r.nodes;
              d["tiling"] = r.tiling ? py::cast(*r.tiling) : py::object(py::none());
              return d;
          },
          py::arg("sides"), py::arg("w"), py::arg("h"),
          py::arg("budget") = std::uint64_t{100'000'000});

    m.def("enumerate_perfect_rects",
          [](int order, Int max_side, std::uint64_t budget) {
              EnumerateOptions options;
              options.node_budget = budget;
              EnumerationResult r = enumerate_perfect_rects(order, max_side, options);
              py::list rects;
              for (const auto& e : r.rects) {
                  py::dict d;
                  d["w"] = e.w;
                  d["h"] = e.h;
                  d["sides"] = e.set.sides;
                  d["tiling"] = py::cast(e.tiling);
                  rects.append(d);
              }
              py::dict out;
              out["rects"] = rects;
              out["budget_exhausted"] = r.budget_exhausted;
              out["nodes"] = r.nodes;
              return out;
          },
          py::arg("order"), py::arg("max_side"),
          py::arg("budget") = std::uint64_t{100'000'000});

    m.def("fib_extend_rect", &fib_extend_rect, py::arg("tiling"));
    m.def("witness_for_odd_count",
          [](int k) {
              auto [set, tiling] = witness_for_odd_count(k);
              return py::make_tuple(set.sides, tiling);
          },
          py::arg("k"));
    m.def("rect_odd_count_verdict",
          [](int k) { return json_to_py(rect_verdict_to_json(rect_odd_count_verdict(k))); },
          py::arg("k"));
    m.def("plane_odd_count_verdict",
          [](int k) { return json_to_py(plane_verdict_to_json(plane_odd_count_verdict(k))); },
          py::arg("k"));

    m.def("pinwheel_patch",
          [](Int x, const WindowRegion& window) { return pinwheel_patch(x, Region{window}); },
          py::arg("x"), py::arg("window"));
    m.def("three_odds_patch",
          [](const WindowRegion& window) { return three_odds_patch(Region{window}); },
          py::arg("window"));

    py::class_<Quadrant>(m, "Quadrant")
        .def(py::init([](Int cx, Int cy, int dx, int dy) {
                 return Quadrant{cx, cy, dx, dy};
             }),
             py::arg("corner_x"), py::arg("corner_y"), py::arg("dir_x"), py::arg("dir_y"))
        .def_readwrite("corner_x", &Quadrant::corner_x)
        .def_readwrite("corner_y", &Quadrant::corner_y)
        .def_readwrite("dir_x", &Quadrant::dir_x)
        .def_readwrite("dir_y", &Quadrant::dir_y);

    m.def("quadrant_whirl_patch",
          [](const Tiling& base, Int scale, bool first_horizontal, const Quadrant& q,
             const WindowRegion& window) {
              WhirlSpec spec{base, scale,
                             first_horizontal ? GrowthAxis::horizontal : GrowthAxis::vertical};
              return quadrant_whirl_patch(spec, q, Region{window});
          },
          py::arg("base"), py::arg("scale"), py::arg("first_horizontal"), py::arg("quadrant"),
          py::arg("window"));
    m.def("whirl_base_tiling", [] { return whirl_base_tiling(); });

    m.def("render_svg", &render_svg, py::arg("tiling"));
    m.def("bouwkamp_text", &bouwkamp_text, py::arg("tiling"));

    py::register_exception<IntOverflowError>(m, "IntOverflowError", PyExc_OverflowError);
    py::register_exception<DuplicateSideError>(m, "DuplicateSideError", PyExc_ValueError);
}
