#include "nullcolor/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace nullcolor {

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    incident_.assign(static_cast<size_t>(n_) + 1, {});
    for (const Edge& e : edges_) {
        incident_[static_cast<size_t>(e.u)].push_back(e.id);
        if (!e.is_loop()) incident_[static_cast<size_t>(e.v)].push_back(e.id);
    }
}

MultiGraph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    EdgeId next_id = 1;
    for (const auto& [u, v] : edge_list) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") with n=" + std::to_string(n));
        edges.push_back(Edge{next_id++, u, v});
    }
    return MultiGraph(n, std::move(edges));
}

std::optional<int> distance(const MultiGraph& g, VertexId u, VertexId v) {
    if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw std::invalid_argument("vertex out of range");
    if (u == v) return 0;
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()) + 1, -1);
    std::queue<VertexId> queue;
    dist[static_cast<size_t>(u)] = 0;
    queue.push(u);
    while (!queue.empty()) {
        VertexId w = queue.front();
        queue.pop();
        for (EdgeId id : g.incident(w)) {
            VertexId x = g.edge(id).other(w);
            if (dist[static_cast<size_t>(x)] < 0) {
                dist[static_cast<size_t>(x)] = dist[static_cast<size_t>(w)] + 1;
                if (x == v) return dist[static_cast<size_t>(x)];
                queue.push(x);
            }
        }
    }
    return std::nullopt;
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<size_t>(n) + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

SpanningTree build_tree(const MultiGraph& g, const std::vector<EdgeId>& order,
                        const std::vector<bool>* flip) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    SpanningTree t;
    t.in_tree.assign(static_cast<size_t>(m) + 1, false);

    DisjointSet ds(n);
    for (EdgeId id : order) {
        const Edge& e = g.edge(id);
        if (!e.is_loop() && ds.unite(e.u, e.v)) t.in_tree[static_cast<size_t>(id)] = true;
    }
    for (EdgeId id : order) {
        if (t.in_tree[static_cast<size_t>(id)]) continue;
        const Edge& e = g.edge(id);
        VertexId tail = std::min(e.u, e.v);
        VertexId head = std::max(e.u, e.v);
        if (flip && (*flip)[static_cast<size_t>(id)] && !e.is_loop()) std::swap(tail, head);
        t.cotree.push_back(OrientedEdge{id, tail, head});
    }

    // Root each component at its smallest vertex; children discovered in
    // ascending edge-id order so the rooting is reproducible.
    t.parent.assign(static_cast<size_t>(n) + 1, 0);
    t.parent_edge.assign(static_cast<size_t>(n) + 1, 0);
    t.depth.assign(static_cast<size_t>(n) + 1, -1);
    std::vector<std::vector<EdgeId>> tree_adj(static_cast<size_t>(n) + 1);
    for (const Edge& e : g.edges())
        if (t.in_tree[static_cast<size_t>(e.id)]) {
            tree_adj[static_cast<size_t>(e.u)].push_back(e.id);
            tree_adj[static_cast<size_t>(e.v)].push_back(e.id);
        }
    for (auto& adj : tree_adj) std::sort(adj.begin(), adj.end());
    for (VertexId root = 1; root <= n; ++root) {
        if (t.depth[static_cast<size_t>(root)] >= 0) continue;
        t.depth[static_cast<size_t>(root)] = 0;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId w = queue.front();
            queue.pop();
            for (EdgeId id : tree_adj[static_cast<size_t>(w)]) {
                VertexId x = g.edge(id).other(w);
                if (t.depth[static_cast<size_t>(x)] < 0) {
                    t.depth[static_cast<size_t>(x)] = t.depth[static_cast<size_t>(w)] + 1;
                    t.parent[static_cast<size_t>(x)] = w;
                    t.parent_edge[static_cast<size_t>(x)] = id;
                    queue.push(x);
                }
            }
        }
    }
    return t;
}

}  // namespace

SpanningTree spanning_tree(const MultiGraph& g) {
    std::vector<EdgeId> order(static_cast<size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 1);
    return build_tree(g, order, nullptr);
}

SpanningTree spanning_tree_custom(const MultiGraph& g, const std::vector<EdgeId>& priority,
                                  const std::vector<bool>& flip_orientation) {
    if (priority.size() != static_cast<size_t>(g.edge_count()))
        throw std::invalid_argument("priority must list every edge id exactly once");
    if (flip_orientation.size() != static_cast<size_t>(g.edge_count()) + 1)
        throw std::invalid_argument("flip_orientation must be indexed by edge id");
    return build_tree(g, priority, &flip_orientation);
}

std::vector<ClosedWalk> fundamental_cycles(const MultiGraph& g, const SpanningTree& t) {
    std::vector<ClosedWalk> cycles;
    cycles.reserve(t.cotree.size());
    for (const OrientedEdge& oe : t.cotree) {
        const Edge& e = g.edge(oe.id);
        ClosedWalk walk;
        walk.vertices.push_back(oe.tail);
        walk.vertices.push_back(oe.head);
        walk.steps.push_back(WalkStep{oe.id, oe.tail == e.u});
        if (oe.tail != oe.head) {
            // Tree path head -> tail: climb both endpoints to their meeting point.
            std::vector<VertexId> up_head, up_tail;
            std::vector<EdgeId> up_head_e, up_tail_e;
            VertexId a = oe.head, b = oe.tail;
            while (t.depth[static_cast<size_t>(a)] > t.depth[static_cast<size_t>(b)]) {
                up_head.push_back(a);
                up_head_e.push_back(t.parent_edge[static_cast<size_t>(a)]);
                a = t.parent[static_cast<size_t>(a)];
            }
            while (t.depth[static_cast<size_t>(b)] > t.depth[static_cast<size_t>(a)]) {
                up_tail.push_back(b);
                up_tail_e.push_back(t.parent_edge[static_cast<size_t>(b)]);
                b = t.parent[static_cast<size_t>(b)];
            }
            while (a != b) {
                up_head.push_back(a);
                up_head_e.push_back(t.parent_edge[static_cast<size_t>(a)]);
                a = t.parent[static_cast<size_t>(a)];
                up_tail.push_back(b);
                up_tail_e.push_back(t.parent_edge[static_cast<size_t>(b)]);
                b = t.parent[static_cast<size_t>(b)];
            }
            // Descend from head to the meet, then walk down to tail.
            for (size_t i = 0; i < up_head.size(); ++i) {
                VertexId from = walk.vertices.back();
                EdgeId id = up_head_e[i];
                VertexId to = g.edge(id).other(from);
                walk.steps.push_back(WalkStep{id, from == g.edge(id).u});
                walk.vertices.push_back(to);
            }
            for (size_t i = up_tail.size(); i-- > 0;) {
                VertexId from = walk.vertices.back();
                EdgeId id = up_tail_e[i];
                VertexId to = up_tail[i];
                walk.steps.push_back(WalkStep{id, from == g.edge(id).u});
                walk.vertices.push_back(to);
            }
        }
        cycles.push_back(std::move(walk));
    }
    return cycles;
}

int component_count(const MultiGraph& g) {
    DisjointSet ds(g.vertex_count());
    int components = g.vertex_count();
    for (const Edge& e : g.edges())
        if (!e.is_loop() && ds.unite(e.u, e.v)) --components;
    return components;
}

int cycle_rank(const MultiGraph& g) {
    return g.edge_count() - g.vertex_count() + component_count(g);
}

bool is_forest(const MultiGraph& g) { return cycle_rank(g) == 0; }

bool is_bipartite(const MultiGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<size_t>(n) + 1, -1);
    for (VertexId start = 1; start <= n; ++start) {
        if (side[static_cast<size_t>(start)] >= 0) continue;
        side[static_cast<size_t>(start)] = 0;
        std::queue<VertexId> queue;
        queue.push(start);
        while (!queue.empty()) {
            VertexId w = queue.front();
            queue.pop();
            for (EdgeId id : g.incident(w)) {
                const Edge& e = g.edge(id);
                if (e.is_loop()) return false;
                VertexId x = e.other(w);
                if (side[static_cast<size_t>(x)] < 0) {
                    side[static_cast<size_t>(x)] = 1 - side[static_cast<size_t>(w)];
                    queue.push(x);
                } else if (side[static_cast<size_t>(x)] == side[static_cast<size_t>(w)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Identification identify_vertices(const MultiGraph& g, VertexId u, VertexId v) {
    if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("cannot identify a vertex with itself");

    const VertexId keep = std::min(u, v);
    const VertexId drop = std::max(u, v);
    Identification result;
    result.vertex_map.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (VertexId w = 1; w <= g.vertex_count(); ++w) {
        if (w == drop)
            result.vertex_map[static_cast<size_t>(w)] = keep;
        else if (w > drop)
            result.vertex_map[static_cast<size_t>(w)] = w - 1;
        else
            result.vertex_map[static_cast<size_t>(w)] = w;
    }

    // Contract the lowest-id u-v edge if one exists; keep everything else.
    for (const Edge& e : g.edges()) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            result.contracted_edge = e.id;
            break;
        }
    }

    result.edge_image.assign(static_cast<size_t>(g.edge_count()) + 1, 0);
    result.edge_preimage.assign(1, 0);
    std::vector<Edge> new_edges;
    EdgeId next_id = 1;
    for (const Edge& e : g.edges()) {
        if (e.id == result.contracted_edge) continue;
        Edge mapped{next_id, result.vertex_map[static_cast<size_t>(e.u)],
                    result.vertex_map[static_cast<size_t>(e.v)]};
        result.edge_image[static_cast<size_t>(e.id)] = next_id;
        result.edge_preimage.push_back(e.id);
        new_edges.push_back(mapped);
        ++next_id;
    }
    result.graph = MultiGraph(g.vertex_count() - 1, std::move(new_edges));
    return result;
}

Simplification simplify(const MultiGraph& g) {
    Simplification result;
    result.edge_image.assign(static_cast<size_t>(g.edge_count()) + 1, 0);
    result.edge_preimage.assign(1, 0);
    std::vector<Edge> new_edges;
    std::vector<std::pair<VertexId, VertexId>> seen;
    EdgeId next_id = 1;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        std::pair<VertexId, VertexId> key{std::min(e.u, e.v), std::max(e.u, e.v)};
        auto it = std::find(seen.begin(), seen.end(), key);
        if (it != seen.end()) {
            result.edge_image[static_cast<size_t>(e.id)] =
                static_cast<EdgeId>(it - seen.begin()) + 1;
            continue;
        }
        seen.push_back(key);
        result.edge_image[static_cast<size_t>(e.id)] = next_id;
        result.edge_preimage.push_back(e.id);
        new_edges.push_back(Edge{next_id, e.u, e.v});
        ++next_id;
    }
    result.graph = MultiGraph(g.vertex_count(), std::move(new_edges));
    return result;
}

}  // namespace nullcolor
