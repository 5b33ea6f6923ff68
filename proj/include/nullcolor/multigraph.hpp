#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace nullcolor {

using VertexId = int;  // 1-based
using EdgeId = int;    // 1-based, dense within a graph

struct Edge {
    EdgeId id = 0;
    VertexId u = 0;  // endpoints in construction order; u == v is a loop
    VertexId v = 0;

    bool is_loop() const { return u == v; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Undirected multigraph. Parallel edges and loops are permitted; vertex
/// identification must keep them to stay faithful at the level of cycles.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId id) const { return edges_[static_cast<size_t>(id) - 1]; }
    const std::vector<Edge>& edges() const { return edges_; }
    /// Edge ids incident to v; a loop at v appears once.
    const std::vector<EdgeId>& incident(VertexId v) const { return incident_[static_cast<size_t>(v)]; }
    bool valid_vertex(VertexId v) const { return v >= 1 && v <= n_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;  // index 0 unused
};

struct OrientedEdge {
    EdgeId id = 0;
    VertexId tail = 0;
    VertexId head = 0;
};

/// Spanning forest plus an ordered, oriented cotree. The cotree order and
/// orientations fix a basis of the cycle space: one fundamental cycle per
/// cotree edge, coordinates given by signed traversal counts.
struct SpanningTree {
    std::vector<bool> in_tree;         // indexed by edge id, [0] unused
    std::vector<OrientedEdge> cotree;  // non-tree edges in basis order
    std::vector<VertexId> parent;      // rooted forest; 0 at roots
    std::vector<EdgeId> parent_edge;   // edge to parent; 0 at roots
    std::vector<int> depth;

    int rank() const { return static_cast<int>(cotree.size()); }
};

struct WalkStep {
    EdgeId edge = 0;
    bool forward = true;  // traversed u -> v of the stored endpoints
};

/// Closed walk v0, v1, ..., vl = v0 with the edge used at each step.
struct ClosedWalk {
    std::vector<VertexId> vertices;  // length l + 1
    std::vector<WalkStep> steps;     // steps[i] joins vertices[i] -> vertices[i+1]

    int length() const { return static_cast<int>(steps.size()); }
};

MultiGraph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

/// Shortest-path length; std::nullopt when u and v lie in different components.
std::optional<int> distance(const MultiGraph& g, VertexId u, VertexId v);

/// Deterministic spanning forest: lowest-edge-id-first, cotree ordered by
/// edge id, each cotree edge oriented low endpoint -> high endpoint
/// (loops trivially).
SpanningTree spanning_tree(const MultiGraph& g);

/// Spanning forest grown with the given edge priority order; cotree follows
/// the same order and orientations are flipped where requested. Results must
/// agree with the default tree on every basis-independent question.
SpanningTree spanning_tree_custom(const MultiGraph& g, const std::vector<EdgeId>& priority,
                                  const std::vector<bool>& flip_orientation);

/// One closed walk per cotree edge: the cotree edge in its chosen
/// orientation followed by the tree path back.
std::vector<ClosedWalk> fundamental_cycles(const MultiGraph& g, const SpanningTree& t);

bool is_forest(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);

int component_count(const MultiGraph& g);

/// m - n + c, the rank of the cycle space.
int cycle_rank(const MultiGraph& g);

/// Result of merging two vertices. When u and v are adjacent exactly one
/// u-v edge (the lowest id) is contracted; every other edge survives, so
/// parallel edges and loops can arise and are kept.
struct Identification {
    MultiGraph graph;
    std::vector<VertexId> vertex_map;  // old vertex -> new vertex, size n + 1
    std::vector<EdgeId> edge_image;    // old edge -> new edge, 0 for the contracted edge
    std::vector<EdgeId> edge_preimage; // new edge -> old edge, size m' + 1
    EdgeId contracted_edge = 0;        // 0 when u, v were not adjacent
};

Identification identify_vertices(const MultiGraph& g, VertexId u, VertexId v);

/// Underlying simple graph: loops dropped, parallel edges merged into the
/// lowest-id representative.
struct Simplification {
    MultiGraph graph;
    std::vector<EdgeId> edge_image;    // old edge -> new edge, 0 for dropped loops
    std::vector<EdgeId> edge_preimage; // new edge -> representative old edge
};

Simplification simplify(const MultiGraph& g);

}  // namespace nullcolor
