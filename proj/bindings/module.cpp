// Python bindings for the coloring toolkit.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "keibridge/codec.hpp"
#include "keibridge/coloring.hpp"
#include "keibridge/diagram.hpp"
#include "keibridge/kei.hpp"
#include "keibridge/simplify.hpp"
#include "keibridge/trisection.hpp"

namespace py = pybind11;
using namespace keibridge;

namespace {

// Parse failures surface as ValueError carrying every diagnostic.
template <class T>
T unwrap(Parsed<T> parsed) {
    if (parsed.ok()) return std::move(*parsed.value);
    std::string msg;
    for (const auto& e : parsed.errors) {
        if (!msg.empty()) msg += "\n";
        msg += e.describe();
    }
    throw py::value_error(msg);
}

SearchOptions opts_of(uint64_t budget) { return SearchOptions{budget}; }

constexpr uint64_t default_budget = SearchOptions{}.budget;

}  // namespace

PYBIND11_MODULE(_keibridge, m) {
    m.doc() = "kei colorings of link, tangle and tri-plane diagrams, with "
              "bridge-number bounds";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<Kei>(m, "Kei")
        .def_static("from_table", &Kei::from_table, py::arg("table"), py::arg("label") = "")
        .def_static("dihedral", &Kei::dihedral, py::arg("p"))
        .def_property_readonly("order", &Kei::order)
        .def_property_readonly("label", &Kei::label)
        .def_property_readonly("table", &Kei::table)
        .def("op", &Kei::op, py::arg("a"), py::arg("b"))
        .def("iterated_act", &Kei::iterated_act, py::arg("x"), py::arg("a"), py::arg("m"))
        .def("is_faithful", &Kei::is_faithful)
        .def("is_dihedral", &Kei::is_dihedral)
        .def("__eq__", [](const Kei& a, const Kei& b) { return a == b; })
        .def("__repr__", [](const Kei& k) {
            return "Kei(order=" + std::to_string(k.order()) +
                   (k.label().empty() ? "" : ", label='" + k.label() + "'") + ")";
        });

    m.def("validate_kei_table", [](const std::vector<std::vector<int>>& table) {
        auto check = validate_kei(table);
        std::vector<std::string> problems = check.structural;
        for (const auto& v : check.violations) problems.push_back(v.describe());
        return problems;
    }, py::arg("table"), "Every structural or axiom violation; empty means valid.");

    py::class_<Crossing>(m, "Crossing")
        .def(py::init([](std::string ui, std::string o, std::string uo) {
                 return Crossing{std::move(ui), std::move(o), std::move(uo)};
             }),
             py::arg("under_in"), py::arg("over"), py::arg("under_out"))
        .def_readwrite("under_in", &Crossing::under_in)
        .def_readwrite("over", &Crossing::over)
        .def_readwrite("under_out", &Crossing::under_out)
        .def("__eq__", [](const Crossing& a, const Crossing& b) { return a == b; });

    py::class_<Join>(m, "Join")
        .def(py::init([](std::string a, std::string b) {
                 return Join{std::move(a), std::move(b)};
             }),
             py::arg("a"), py::arg("b"))
        .def_readwrite("a", &Join::a)
        .def_readwrite("b", &Join::b)
        .def("__eq__", [](const Join& x, const Join& y) { return x == y; });

    py::class_<Diagram>(m, "Diagram")
        .def(py::init<>())
        .def_readwrite("arcs", &Diagram::arcs)
        .def_readwrite("crossings", &Diagram::crossings)
        .def_readwrite("joins", &Diagram::joins)
        .def_readwrite("ends", &Diagram::ends)
        .def_readwrite("terminal", &Diagram::terminal)
        .def("is_tangle", &Diagram::is_tangle)
        .def("strands", &Diagram::strands)
        .def("terminal_arc", &Diagram::terminal_arc)
        .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; })
        .def("__repr__", [](const Diagram& d) {
            return "Diagram(arcs=" + std::to_string(d.arcs.size()) +
                   ", crossings=" + std::to_string(d.crossings.size()) + ")";
        });

    py::class_<TriPlane>(m, "TriPlane")
        .def(py::init<>())
        .def_readwrite("b", &TriPlane::b)
        .def_readwrite("boundary", &TriPlane::boundary)
        .def_readwrite("panels", &TriPlane::panels)
        .def_readwrite("patch_counts", &TriPlane::patch_counts)
        .def("__eq__", [](const TriPlane& a, const TriPlane& b) { return a == b; });

    m.def("validate_diagram", &validate_diagram, py::arg("diagram"));
    m.def("component_count", &component_count, py::arg("diagram"));
    m.def("components", &components, py::arg("diagram"));

    m.def("trivial_link", &trivial_link, py::arg("c"));
    m.def("torus_2q", &torus_2q, py::arg("q"));
    m.def("connected_sum", &connected_sum, py::arg("d1"), py::arg("arc1"), py::arg("d2"),
          py::arg("arc2"));
    m.def("cut_to_1tangle", &cut_to_1tangle, py::arg("diagram"), py::arg("arc"));
    m.def("close_1tangle", &close_1tangle, py::arg("tangle"));
    m.def("panel_union", &panel_union, py::arg("a"), py::arg("b"));
    m.def("unknotted_sphere_triplane", &unknotted_sphere_triplane);

    m.def("parse_diagram", [](const std::string& t) { return unwrap(parse_diagram(t)); },
          py::arg("text"));
    m.def("parse_link", [](const std::string& t) { return unwrap(parse_link(t)); },
          py::arg("text"));
    m.def("parse_tangle", [](const std::string& t) { return unwrap(parse_tangle(t)); },
          py::arg("text"));
    m.def("serialize_diagram", &serialize_diagram, py::arg("diagram"));
    m.def("parse_kei", [](const std::string& t) { return unwrap(parse_kei(t)); },
          py::arg("text"));
    m.def("serialize_kei", &serialize_kei, py::arg("kei"));
    m.def("parse_triplane", [](const std::string& t) { return unwrap(parse_triplane(t)); },
          py::arg("text"));
    m.def("serialize_triplane", &serialize_triplane, py::arg("triplane"));

    m.def("is_valid_coloring", &is_valid_coloring, py::arg("diagram"), py::arg("kei"),
          py::arg("assignment"));
    m.def("count_colorings",
          [](const Diagram& d, const Kei& x, uint64_t budget) {
              return count_colorings(d, x, opts_of(budget));
          },
          py::arg("diagram"), py::arg("kei"), py::arg("budget") = default_budget);
    m.def("count_colorings_backtracking",
          [](const Diagram& d, const Kei& x, uint64_t budget) {
              return count_colorings_backtracking(d, x, opts_of(budget));
          },
          py::arg("diagram"), py::arg("kei"), py::arg("budget") = default_budget);
    m.def("brute_force_count",
          [](const Diagram& d, const Kei& x, uint64_t budget) {
              return brute_force_count(d, x, opts_of(budget));
          },
          py::arg("diagram"), py::arg("kei"), py::arg("budget") = default_budget);
    m.def("count_dihedral", &count_dihedral, py::arg("diagram"), py::arg("p"));
    m.def("enumerate_colorings",
          [](const Diagram& d, const Kei& x, uint64_t budget) {
              return enumerate_colorings(d, x, opts_of(budget));
          },
          py::arg("diagram"), py::arg("kei"), py::arg("budget") = default_budget);
    m.def("extend_boundary_coloring",
          [](const Diagram& t, const std::vector<int>& bc, const Kei& x, uint64_t budget) {
              return extend_boundary_coloring(t, bc, x, opts_of(budget));
          },
          py::arg("tangle"), py::arg("boundary_colors"), py::arg("kei"),
          py::arg("budget") = default_budget);
    m.def("count_triplane_colorings",
          [](const TriPlane& tp, const Kei& x, uint64_t budget) {
              return count_triplane_colorings(tp, x, opts_of(budget));
          },
          py::arg("triplane"), py::arg("kei"), py::arg("budget") = default_budget);
    m.def("enumerate_triplane_colorings",
          [](const TriPlane& tp, const Kei& x, uint64_t budget) {
              return enumerate_triplane_colorings(tp, x, opts_of(budget));
          },
          py::arg("triplane"), py::arg("kei"), py::arg("budget") = default_budget);

    py::class_<SimplifyResult>(m, "SimplifyResult")
        .def_readonly("crossingless", &SimplifyResult::crossingless)
        .def_readonly("best", &SimplifyResult::best)
        .def_readonly("expansions", &SimplifyResult::expansions);
    m.def("quotient_joins", &quotient_joins, py::arg("diagram"));
    m.def("reidemeister_neighbors", &reidemeister_neighbors, py::arg("diagram"));
    m.def("simplify_bounded", &simplify_bounded, py::arg("diagram"),
          py::arg("max_expansions") = 1000);

    py::class_<TriplaneReport>(m, "TriplaneReport")
        .def_readonly("structural", &TriplaneReport::structural)
        .def_readonly("pair_components", &TriplaneReport::pair_components)
        .def_property_readonly("pair_verdicts",
                               [](const TriplaneReport& r) {
                                   std::vector<std::string> out;
                                   for (auto v : r.pair_verdicts) out.push_back(to_string(v));
                                   return out;
                               })
        .def("structurally_ok", &TriplaneReport::structurally_ok)
        .def("all_certified_trivial", &TriplaneReport::all_certified_trivial);
    m.def("validate_triplane", &validate_triplane, py::arg("triplane"),
          py::arg("max_expansions") = 1000);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("col_count", &BoundReport::col_count)
        .def_readonly("kei_order", &BoundReport::kei_order)
        .def_readonly("chi", &BoundReport::chi)
        .def_readonly("raw_bound", &BoundReport::raw_bound)
        .def_readonly("refined_bound", &BoundReport::refined_bound);
    py::class_<TwistSpunBridgeNumbers>(m, "TwistSpunBridgeNumbers")
        .def_readonly("sphere", &TwistSpunBridgeNumbers::sphere)
        .def_readonly("with_p", &TwistSpunBridgeNumbers::with_p)
        .def_readonly("with_t", &TwistSpunBridgeNumbers::with_t);

    m.attr("BRIDGE_NUMBER_P") = bridge_number_P;
    m.attr("BRIDGE_NUMBER_T") = bridge_number_T;
    m.attr("CHI_SPHERE") = chi_sphere;
    m.attr("CHI_RP2") = chi_rp2;
    m.attr("CHI_TORUS") = chi_torus;

    m.def("euler_char",
          [](int b, int c1, int c2, int c3) { return euler_char({b, c1, c2, c3}); },
          py::arg("b"), py::arg("c1"), py::arg("c2"), py::arg("c3"));
    m.def("min_patch_bound", &min_patch_bound, py::arg("col_count"), py::arg("kei_order"));
    m.def("bridge_lower_bound", &bridge_lower_bound, py::arg("col_count"),
          py::arg("kei_order"), py::arg("chi"));
    m.def("check_congruence", &check_congruence, py::arg("b"), py::arg("chi"));
    m.def("act_on_coloring", &act_on_coloring, py::arg("tangle"), py::arg("coloring"),
          py::arg("m"), py::arg("kei"));
    m.def("twist_spun_coloring_count",
          [](const Diagram& t, const Kei& x, long long mm, uint64_t budget) {
              return twist_spun_coloring_count(t, x, mm, opts_of(budget));
          },
          py::arg("tangle"), py::arg("kei"), py::arg("m"),
          py::arg("budget") = default_budget);
    m.def("parity_shortcut_count",
          [](const Diagram& t, const Kei& x, long long mm, uint64_t budget) {
              return parity_shortcut_count(t, x, mm, opts_of(budget));
          },
          py::arg("tangle"), py::arg("kei"), py::arg("m"),
          py::arg("budget") = default_budget);
    m.def("check_hypothesis",
          [](const Diagram& t, const Kei& x, int b_k, uint64_t budget) {
              return check_hypothesis(t, x, b_k, opts_of(budget));
          },
          py::arg("tangle"), py::arg("kei"), py::arg("b_k"),
          py::arg("budget") = default_budget);
    m.def("twist_spun_bridge_numbers", &twist_spun_bridge_numbers, py::arg("b_k"),
          py::arg("hypothesis_ok"));
    m.def("connected_sum_upper_bound", &connected_sum_upper_bound, py::arg("b_a"),
          py::arg("b_b"));
    m.def("torus_sum_bridge_number", &torus_sum_bridge_number, py::arg("k"));
}
