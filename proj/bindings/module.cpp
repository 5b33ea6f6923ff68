#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nullcolor/formats.hpp"
#include "nullcolor/generators.hpp"
#include "nullcolor/homology.hpp"
#include "nullcolor/search.hpp"

namespace py = pybind11;
using namespace nullcolor;

namespace {

SurfaceKind parse_kind(const std::string& name) {
    if (name == "sphere") return SurfaceKind::Sphere;
    if (name == "projective") return SurfaceKind::ProjectivePlane;
    throw std::invalid_argument("surface must be 'sphere' or 'projective'");
}

Face face_of(const std::array<int, 3>& t) { return make_face(t[0], t[1], t[2]); }

std::vector<std::array<int, 3>> face_tuples(const std::vector<Face>& faces) {
    std::vector<std::array<int, 3>> out;
    out.reserve(faces.size());
    for (const Face& f : faces) out.push_back(f.v);
    return out;
}

SearchBudget budget_of(long long max_nodes) {
    SearchBudget b;
    b.max_nodes = max_nodes;
    return b;
}

std::vector<int> colors_list(const Coloring& f) {
    return {f.color.begin() + 1, f.color.end()};
}

py::list snf_list(const IntMatrix& m) {
    py::list out;
    for (const BigInt& d : smith_normal_form(m)) out.append(py::int_(py::str(d.str())));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "rainbow-free colorings of sphere and projective-plane triangulations";

    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<MultiGraph>(m, "MultiGraph")
        .def_property_readonly("vertex_count", &MultiGraph::vertex_count)
        .def_property_readonly("edge_count", &MultiGraph::edge_count)
        .def_property_readonly("edges",
                               [](const MultiGraph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
                                   return out;
                               })
        .def("__repr__", [](const MultiGraph& g) {
            std::ostringstream s;
            s << "MultiGraph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return s.str();
        });

    py::class_<Triangulation>(m, "Triangulation")
        .def_property_readonly("vertex_count", &Triangulation::vertex_count)
        .def_property_readonly("edge_count", &Triangulation::edge_count)
        .def_property_readonly("face_count", &Triangulation::face_count)
        .def_property_readonly("faces", [](const Triangulation& t) { return face_tuples(t.faces()); })
        .def_property_readonly("surface", [](const Triangulation& t) { return surface_name(t.kind()); })
        .def_property_readonly("skeleton", &Triangulation::skeleton)
        .def("__repr__", [](const Triangulation& t) {
            std::ostringstream s;
            s << "Triangulation(" << surface_name(t.kind()) << ", n=" << t.vertex_count()
              << ", F=" << t.face_count() << ")";
            return s.str();
        });

    py::class_<Coloring>(m, "Coloring")
        .def_property_readonly("k", [](const Coloring& f) { return f.k; })
        .def_property_readonly("colors", &colors_list)
        .def("__repr__", [](const Coloring& f) {
            std::ostringstream s;
            s << "Coloring(k=" << f.k << ")";
            return s.str();
        });

    py::class_<BoundReport>(m, "BoundReport")
        .def_property_readonly("n", [](const BoundReport& r) { return r.n; })
        .def_property_readonly("surface", [](const BoundReport& r) { return surface_name(r.kind); })
        .def_property_readonly("chi_f", [](const BoundReport& r) { return r.chi_f; })
        .def_property_readonly("witness", [](const BoundReport& r) { return r.witness; })
        .def_property_readonly("bound", [](const BoundReport& r) { return r.bound_value; })
        .def_property_readonly("tight", [](const BoundReport& r) { return r.tight; });

    py::class_<ExtremalWitness>(m, "ExtremalWitness")
        .def_property_readonly("triangulation",
                               [](const ExtremalWitness& w) { return w.triangulation; })
        .def_property_readonly("coloring", [](const ExtremalWitness& w) { return w.coloring; })
        .def_property_readonly("colors", [](const ExtremalWitness& w) { return w.colors; })
        .def_property_readonly("base_size", [](const ExtremalWitness& w) { return w.base_size; })
        .def_property_readonly("subdivided",
                               [](const ExtremalWitness& w) { return face_tuples(w.subdivided); })
        .def_property_readonly("constructive",
                               [](const ExtremalWitness& w) { return w.constructive; });

    m.def("build_graph", &build_graph, py::arg("n"), py::arg("edges"));
    m.def("distance", &distance, py::arg("graph"), py::arg("u"), py::arg("v"));
    m.def("is_forest", &is_forest);
    m.def("is_bipartite", &is_bipartite);
    m.def("cycle_rank", &cycle_rank);
    m.def(
        "identify_vertices",
        [](const MultiGraph& g, int u, int v) {
            Identification ident = identify_vertices(g, u, v);
            return py::make_tuple(ident.graph, ident.vertex_map, ident.edge_preimage);
        },
        py::arg("graph"), py::arg("u"), py::arg("v"),
        "Merge u and v; returns (graph, vertex_map, edge_preimage).");
    m.def("simplify", [](const MultiGraph& g) { return simplify(g).graph; });

    m.def(
        "validate_triangulation",
        [](int n, const std::vector<std::array<int, 3>>& faces) {
            std::vector<Face> fs;
            fs.reserve(faces.size());
            for (const auto& f : faces) fs.push_back(face_of(f));
            return validate_triangulation(n, fs);
        },
        py::arg("n"), py::arg("faces"));
    m.def("classify_surface", [](const Triangulation& t) { return surface_name(t.kind()); });
    m.def(
        "face_count_expected",
        [](int n, const std::string& surface) { return face_count_expected(n, parse_kind(surface)); },
        py::arg("n"), py::arg("surface"));
    m.def(
        "subdivide_face",
        [](const Triangulation& t, const std::array<int, 3>& f) {
            return subdivide_face(t, face_of(f));
        },
        py::arg("triangulation"), py::arg("face"));

    m.def(
        "make_coloring",
        [](const Triangulation& t, const std::vector<int>& raw) { return make_coloring(t, raw); },
        py::arg("triangulation"), py::arg("raw"));
    m.def(
        "make_graph_coloring",
        [](const MultiGraph& g, const std::vector<int>& raw) { return make_coloring(g, raw); },
        py::arg("graph"), py::arg("raw"));
    m.def("rainbow_faces", [](const Triangulation& t, const Coloring& f) {
        return face_tuples(rainbow_faces(t, f));
    });
    m.def("is_non_rainbow", &is_non_rainbow);
    m.def("quotient_graph", &quotient_graph);
    m.def("bichromatic_face_count", &bichromatic_face_count, py::arg("triangulation"),
          py::arg("coloring"), py::arg("i"), py::arg("j"));

    m.def("coloring_induced_matrix",
          [](const MultiGraph& g, const Coloring& f) { return coloring_induced_matrix(g, f); });
    m.def("is_null_coloring",
          [](const MultiGraph& g, const Coloring& f) { return is_null_coloring(g, f); });
    m.def("smith_normal_form",
          [](const IntMatrix& matrix) { return snf_list(matrix); });
    m.def("is_epimorphism", &is_epimorphism, py::arg("matrix"), py::arg("codomain_rank"));

    m.def(
        "bound", [](int n, const std::string& surface) { return bound(n, parse_kind(surface)); },
        py::arg("n"), py::arg("surface"));
    m.def(
        "exists_non_rainbow_k",
        [](const Triangulation& t, int k, long long max_nodes) -> py::object {
            auto witness = exists_non_rainbow_k(t, k, budget_of(max_nodes));
            if (!witness) return py::none();
            return py::cast(*witness);
        },
        py::arg("triangulation"), py::arg("k"), py::arg("max_nodes") = SearchBudget{}.max_nodes);
    m.def(
        "chi_f",
        [](const Triangulation& t, long long max_nodes, bool defensive) {
            return chi_f(t, budget_of(max_nodes), defensive);
        },
        py::arg("triangulation"), py::arg("max_nodes") = SearchBudget{}.max_nodes,
        py::arg("defensive") = false);
    m.def(
        "max_null",
        [](const MultiGraph& g, long long max_nodes) {
            auto [k, witness] = max_null(g, budget_of(max_nodes));
            return py::make_tuple(k, witness);
        },
        py::arg("graph"), py::arg("max_nodes") = SearchBudget{}.max_nodes);
    m.def(
        "is_maximal_null",
        [](const MultiGraph& g, const Coloring& f, long long max_nodes) {
            return is_maximal_null(g, f, budget_of(max_nodes));
        },
        py::arg("graph"), py::arg("coloring"), py::arg("max_nodes") = SearchBudget{}.max_nodes);
    m.def(
        "verify_bound",
        [](const Triangulation& t, long long max_nodes) {
            return verify_bound(t, budget_of(max_nodes));
        },
        py::arg("triangulation"), py::arg("max_nodes") = SearchBudget{}.max_nodes);

    m.def("tetrahedron", &tetrahedron);
    m.def("octahedron", &octahedron);
    m.def("icosahedron", &icosahedron);
    m.def("bipyramid", &bipyramid, py::arg("q"));
    m.def("stacked", &stacked, py::arg("n"), py::arg("face_choices") = std::vector<int>{});
    m.def("projective_base", &projective_base);
    m.def("projective_family", &projective_family, py::arg("n"),
          py::arg("face_choices") = std::vector<int>{});
    m.def(
        "extremal",
        [](int n, const std::string& surface, long long max_nodes) {
            return extremal(n, parse_kind(surface), budget_of(max_nodes));
        },
        py::arg("n"), py::arg("surface"), py::arg("max_nodes") = SearchBudget{}.max_nodes);
}
