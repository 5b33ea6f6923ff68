#pragma once

#include <vector>

#include "nullcolor/multigraph.hpp"
#include "nullcolor/triangulation.hpp"

namespace nullcolor {

using Color = int;

/// Surjective vertex -> color assignment onto the dense range 1..k.
/// Colorings need not be proper: adjacent vertices may share a color.
struct Coloring {
    int k = 0;
    std::vector<Color> color;  // indexed by vertex, [0] unused

    int n() const { return static_cast<int>(color.size()) - 1; }
    Color of(VertexId v) const { return color[static_cast<size_t>(v)]; }
};

/// Normalize an arbitrary assignment (raw[v-1] is the raw color of vertex v)
/// to dense colors 1..k in order of first occurrence. Classes are preserved.
Coloring make_coloring(const MultiGraph& g, const std::vector<int>& raw);
Coloring make_coloring(const Triangulation& t, const std::vector<int>& raw);

std::vector<Face> rainbow_faces(const Triangulation& t, const Coloring& f);

bool is_non_rainbow(const Triangulation& t, const Coloring& f);

/// Simple graph on the color classes; classes i and j are adjacent iff the
/// graph has an (ij)-edge. Loops and multiplicities never appear.
MultiGraph quotient_graph(const MultiGraph& g, const Coloring& f);

/// Number of faces whose colors lie in {i, j} and use both.
int bichromatic_face_count(const Triangulation& t, const Coloring& f, Color i, Color j);

}  // namespace nullcolor
