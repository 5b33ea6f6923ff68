#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "nullcolor/coloring.hpp"
#include "nullcolor/multigraph.hpp"

namespace nullcolor {

using BigInt = boost::multiprecision::cpp_int;

/// Integer matrix, row major. Rows are indexed by the fundamental cycles of
/// a domain spanning tree, columns by the oriented cotree edges of a
/// codomain spanning tree; entry (i, j) is the signed number of times the
/// image of cycle i traverses cotree edge j.
using IntMatrix = std::vector<std::vector<long long>>;

/// The complete graph on the colors 1..k together with its deterministic
/// spanning tree (the star at color 1). Edges are ordered lexicographically,
/// so the cotree consists of the (k-1)(k-2)/2 pairs not touching color 1.
struct ColorGraph {
    int k = 0;
    MultiGraph graph;
    SpanningTree tree;

    EdgeId edge_between(Color i, Color j) const;
};

ColorGraph make_color_graph(int k);

/// Image of one domain edge under a vertex map: either it collapses to a
/// codomain vertex, or it maps onto a codomain edge. `aligned` records
/// whether the stored endpoint order of the domain edge matches the stored
/// endpoint order of the image edge.
struct EdgeImageEntry {
    EdgeId edge = 0;     // 0 when the domain edge collapses
    VertexId vertex = 0; // target vertex when collapsed
    bool aligned = true;
};

using EdgeImage = std::vector<EdgeImageEntry>;  // indexed by domain edge id, [0] unused

/// Matrix of the homomorphism induced on cycle spaces by a vertex map with
/// the given edge images. Collapsed edges contribute nothing; each traversal
/// of an oriented cotree edge of the codomain contributes +-1.
IntMatrix induced_matrix(const MultiGraph& domain, const SpanningTree& dtree,
                         const MultiGraph& codomain, const SpanningTree& ctree,
                         const std::vector<VertexId>& vertex_map, const EdgeImage& emap);

EdgeImage edge_image_of_coloring(const MultiGraph& g, const Coloring& f, const ColorGraph& target);

/// Matrix of the map into the complete graph on the colors: monochromatic
/// edges collapse, bichromatic edges map to the edge between their colors.
IntMatrix coloring_induced_matrix(const MultiGraph& g, const Coloring& f);
IntMatrix coloring_induced_matrix(const MultiGraph& g, const Coloring& f,
                                  const SpanningTree& dtree, const ColorGraph& target);

/// True iff the coloring induces the zero map on cycles; independent of the
/// spanning trees and orientations used to compute the matrix.
bool is_null_coloring(const MultiGraph& g, const Coloring& f);

bool is_zero_matrix(const IntMatrix& m);

/// Elementary divisors d1 | d2 | ... | dr of an integer matrix, all positive,
/// r = rank. Exact arbitrary-precision arithmetic throughout.
std::vector<BigInt> smith_normal_form(const IntMatrix& m);

/// True iff the matrix presents a surjection onto a free group of the given
/// rank: full column-space rank with all elementary divisors 1.
bool is_epimorphism(const IntMatrix& m, int codomain_rank);

/// Number of steps of the walk whose edge endpoints carry colors {i, j}.
int ij_edge_count_on_walk(const MultiGraph& g, const Coloring& f, const ClosedWalk& w,
                          Color i, Color j);

/// Matrix of the merge map onto the identified multigraph itself.
IntMatrix identification_induced_matrix(const MultiGraph& g, const Identification& ident);

/// Matrix of the merge map followed by the retraction onto the underlying
/// simple graph of the identified graph. A newly parallel pair collapses to
/// one edge and newly created loops collapse to their vertex, which is the
/// quotient on which the merge map is surjective at the level of cycles.
IntMatrix identification_induced_matrix_simple(const MultiGraph& g, const Identification& ident,
                                               const Simplification& simp);

}  // namespace nullcolor
