#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "circstab/autgroup.hpp"
#include "circstab/compat.hpp"
#include "circstab/json_io.hpp"
#include "circstab/setparse.hpp"
#include "circstab/skeleton.hpp"
#include "circstab/stability.hpp"
#include "circstab/survey.hpp"
#include "circstab/wilson.hpp"

namespace py = pybind11;
using namespace circstab;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list l;
            for (const auto& e : j) l.append(json_to_py(e));
            return l;
        }
        case nlohmann::json::value_t::object: {
            py::dict d;
            for (auto it = j.begin(); it != j.end(); ++it)
                d[py::str(it.key())] = json_to_py(it.value());
            return d;
        }
        default: return py::none();
    }
}

SurveyOptions options_from_kwargs(int workers, bool with_compat, bool dedupe_ci, int c2_fixed_b,
                                  const std::string& out_path) {
    SurveyOptions opt;
    opt.workers = workers;
    opt.with_compat = with_compat;
    opt.dedupe_ci = dedupe_ci;
    opt.c2_fixed_b = c2_fixed_b;
    opt.out_path = out_path;
    return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "circulant/abelian Cayley graph stability toolkit";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_RuntimeError);

    py::class_<AbelianGroup>(m, "AbelianGroup")
        .def_static("cyclic", &AbelianGroup::cyclic, py::arg("n"))
        .def_static("product", &AbelianGroup::product, py::arg("factors"))
        .def_property_readonly("order", &AbelianGroup::order)
        .def_property_readonly("invariant_factors", &AbelianGroup::invariant_factors)
        .def_property_readonly("is_cyclic", &AbelianGroup::is_cyclic)
        .def("element", &AbelianGroup::element, py::arg("coords"))
        .def("coords_of", &AbelianGroup::coords_of, py::arg("e"))
        .def("add", &AbelianGroup::add)
        .def("neg", &AbelianGroup::neg)
        .def("name", &AbelianGroup::name)
        .def("descriptor", &AbelianGroup::descriptor)
        .def("__repr__",
             [](const AbelianGroup& g) { return "AbelianGroup(" + g.descriptor() + ")"; });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::string>>(), py::arg("n"),
             py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("add_edge", &Graph::add_edge)
        .def("edges", &Graph::edges)
        .def("label", &Graph::label)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("cayley_graph", &cayley_graph, py::arg("group"), py::arg("set"));
    m.def("circulant", &circulant, py::arg("n"), py::arg("set"));
    m.def("double_cover", &double_cover);
    m.def("double_cover_as_circulant", &double_cover_as_circulant, py::arg("n"), py::arg("set"));
    m.def("direct_product", &direct_product);
    m.def("lexicographic_product", &lexicographic_product);
    m.def("cartesian_product", &cartesian_product);
    m.def("minus_product_identity_check", &minus_product_identity_check);
    m.def("complete", &complete);
    m.def("cycle", &cycle);
    m.def("edgeless", &edgeless);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("disjoint_union", &disjoint_union);
    m.def("is_connected", &is_connected);
    m.def("is_bipartite", &is_bipartite);
    m.def("is_vertex_determining", &is_vertex_determining);
    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"), py::arg("cap") = 64);
    m.def("to_dot", &to_dot);

    m.def(
        "automorphism_group",
        [](const Graph& g, int cap) { return json_to_py(permgroup_json(automorphism_group(g, cap))); },
        py::arg("graph"), py::arg("cap") = 128);
    m.def(
        "group_order",
        [](const std::vector<std::vector<int>>& gens) {
            std::vector<Permutation> ps;
            for (auto& v : gens) ps.emplace_back(v);
            return group_order(ps).str();
        },
        py::arg("generators"));
    m.def(
        "is_arc_transitive", [](const Graph& g, int cap) { return is_arc_transitive(g, cap); },
        py::arg("graph"), py::arg("cap") = 128);
    m.def(
        "is_edge_transitive", [](const Graph& g, int cap) { return is_edge_transitive(g, cap); },
        py::arg("graph"), py::arg("cap") = 128);
    m.def("sufficient_arc_transitivity", &sufficient_arc_transitivity, py::arg("group"),
          py::arg("set"), py::arg("group_cap") = 64);
    m.def("is_normal_cayley", &is_normal_cayley, py::arg("group"), py::arg("set"),
          py::arg("vertex_cap") = 128, py::arg("group_cap") = 64);

    m.def(
        "is_stable", [](const Graph& g, int cap) { return is_stable(g, cap); }, py::arg("graph"),
        py::arg("cap") = 128);
    m.def(
        "classify",
        [](const Graph& g, int cap, bool witness) {
            return json_to_py(verdict_json(classify(g, cap, witness)));
        },
        py::arg("graph"), py::arg("cap") = 128, py::arg("extract_witness") = true);
    m.def(
        "tf_witness",
        [](const Graph& g, int cap) -> py::object {
            auto w = tf_witness(g, cap);
            if (!w) return py::none();
            return py::make_tuple(w->alpha.img, w->beta.img);
        },
        py::arg("graph"), py::arg("cap") = 128);
    m.def(
        "verify_tf_pair",
        [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
            return verify_tf_pair(g, Permutation(a), Permutation(b));
        },
        py::arg("graph"), py::arg("alpha"), py::arg("beta"));

    m.def("boolean_square", &boolean_square);
    m.def("cartesian_skeleton", &cartesian_skeleton);
    m.def("dispensable_edges", &dispensable_edges);

    m.def(
        "check_conditions",
        [](int n, const std::vector<int>& s) { return json_to_py(report_json(check_all(n, s))); },
        py::arg("n"), py::arg("set"));
    m.def("c2_holds_for_b", &c2_holds_for_b, py::arg("n"), py::arg("set"), py::arg("b"));

    m.def(
        "compatible_matrix_search",
        [](const Graph& g, long long limit) {
            return json_to_py(compat_json(compatible_matrix_search(g, limit)));
        },
        py::arg("graph"), py::arg("node_limit") = 10000000);
    m.def(
        "compatible_cayley_search",
        [](const AbelianGroup& g, const std::vector<int>& s, long long limit) {
            return json_to_py(compat_json(compatible_cayley_search(g, s, limit)));
        },
        py::arg("group"), py::arg("set"), py::arg("node_limit") = 10000000);
    m.def(
        "thm3_certificate",
        [](int l, int mm, int cap) { return json_to_py(thm3_json(thm3_certificate(l, mm, cap))); },
        py::arg("l"), py::arg("m"), py::arg("cap") = 128);

    m.def("enumerate_connection_sets",
          py::overload_cast<const AbelianGroup&>(&enumerate_connection_sets), py::arg("group"));
    m.def("enumerate_connection_sets_cyclic", py::overload_cast<int>(&enumerate_connection_sets),
          py::arg("n"));
    m.def("abelian_groups_of_order", &abelian_groups_of_order, py::arg("order"));
    m.def(
        "classify_one",
        [](const AbelianGroup& g, const std::vector<int>& s, int workers, bool with_compat,
           bool dedupe, int c2b, const std::string& out) {
            auto opt = options_from_kwargs(workers, with_compat, dedupe, c2b, out);
            return json_to_py(record_json(classify_one(g, s, opt)));
        },
        py::arg("group"), py::arg("set"), py::arg("workers") = 1, py::arg("with_compat") = false,
        py::arg("dedupe_ci") = false, py::arg("c2_fixed_b") = 0, py::arg("out_path") = "");
    m.def(
        "run_survey",
        [](const std::vector<AbelianGroup>& groups, int workers, bool with_compat, bool dedupe,
           int c2b, const std::string& out) {
            auto opt = options_from_kwargs(workers, with_compat, dedupe, c2b, out);
            return json_to_py(aggregate_json(run_survey(groups, opt)));
        },
        py::arg("groups"), py::arg("workers") = 1, py::arg("with_compat") = false,
        py::arg("dedupe_ci") = false, py::arg("c2_fixed_b") = 0, py::arg("out_path") = "");

    m.def("parse_group", &parse_group);
    m.def("parse_set", &parse_set);
    m.def("format_set", &format_set);
}
