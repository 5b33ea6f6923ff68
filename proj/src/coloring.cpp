#include "nullcolor/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nullcolor {

namespace {

Coloring normalize(int n, const std::vector<int>& raw) {
    if (raw.size() != static_cast<size_t>(n))
        throw std::invalid_argument("coloring must assign every vertex exactly once");
    Coloring f;
    f.color.assign(static_cast<size_t>(n) + 1, 0);
    std::map<int, Color> relabel;
    for (int v = 1; v <= n; ++v) {
        int raw_color = raw[static_cast<size_t>(v) - 1];
        auto [it, inserted] = relabel.try_emplace(raw_color, static_cast<Color>(relabel.size()) + 1);
        f.color[static_cast<size_t>(v)] = it->second;
    }
    f.k = static_cast<int>(relabel.size());
    return f;
}

}  // namespace

Coloring make_coloring(const MultiGraph& g, const std::vector<int>& raw) {
    return normalize(g.vertex_count(), raw);
}

Coloring make_coloring(const Triangulation& t, const std::vector<int>& raw) {
    return normalize(t.vertex_count(), raw);
}

std::vector<Face> rainbow_faces(const Triangulation& t, const Coloring& f) {
    if (f.n() != t.vertex_count())
        throw std::invalid_argument("coloring does not match the triangulation");
    std::vector<Face> result;
    for (const Face& face : t.faces()) {
        Color a = f.of(face.v[0]), b = f.of(face.v[1]), c = f.of(face.v[2]);
        if (a != b && b != c && a != c) result.push_back(face);
    }
    return result;
}

bool is_non_rainbow(const Triangulation& t, const Coloring& f) {
    return rainbow_faces(t, f).empty();
}

MultiGraph quotient_graph(const MultiGraph& g, const Coloring& f) {
    if (f.n() != g.vertex_count())
        throw std::invalid_argument("coloring does not match the graph");
    std::set<std::pair<Color, Color>> pairs;
    for (const Edge& e : g.edges()) {
        Color a = f.of(e.u), b = f.of(e.v);
        if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::pair<int, int>> edge_list(pairs.begin(), pairs.end());
    return build_graph(f.k, edge_list);
}

int bichromatic_face_count(const Triangulation& t, const Coloring& f, Color i, Color j) {
    if (i == j) throw std::invalid_argument("bichromatic count needs two distinct colors");
    int count = 0;
    for (const Face& face : t.faces()) {
        Color a = f.of(face.v[0]), b = f.of(face.v[1]), c = f.of(face.v[2]);
        bool uses_i = a == i || b == i || c == i;
        bool uses_j = a == j || b == j || c == j;
        bool within = (a == i || a == j) && (b == i || b == j) && (c == i || c == j);
        if (uses_i && uses_j && within) ++count;
    }
    return count;
}

}  // namespace nullcolor
