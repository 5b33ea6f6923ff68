#include "nullcolor/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nullcolor {

EdgeId ColorGraph::edge_between(Color i, Color j) const {
    if (i == j || i < 1 || j < 1 || i > k || j > k)
        throw std::invalid_argument("edge_between needs two distinct colors in 1..k");
    Color a = std::min(i, j), b = std::max(i, j);
    // Edges are listed (1,2), (1,3), ..., (1,k), (2,3), ...
    int before = (a - 1) * k - (a - 1) * a / 2;
    return before + (b - a);
}

ColorGraph make_color_graph(int k) {
    if (k < 1) throw std::invalid_argument("need at least one color");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) pairs.push_back({i, j});
    ColorGraph cg;
    cg.k = k;
    cg.graph = build_graph(k, pairs);
    cg.tree = spanning_tree(cg.graph);
    return cg;
}

IntMatrix induced_matrix(const MultiGraph& domain, const SpanningTree& dtree,
                         const MultiGraph& codomain, const SpanningTree& ctree,
                         const std::vector<VertexId>& vertex_map, const EdgeImage& emap) {
    if (vertex_map.size() != static_cast<size_t>(domain.vertex_count()) + 1)
        throw std::invalid_argument("vertex map must cover every domain vertex");
    if (emap.size() != static_cast<size_t>(domain.edge_count()) + 1)
        throw std::invalid_argument("edge image must cover every domain edge");
    for (const Edge& e : domain.edges()) {
        const EdgeImageEntry& entry = emap[static_cast<size_t>(e.id)];
        VertexId iu = vertex_map[static_cast<size_t>(e.u)];
        VertexId iv = vertex_map[static_cast<size_t>(e.v)];
        if (entry.edge == 0) {
            if (iu != entry.vertex || iv != entry.vertex)
                throw std::invalid_argument("collapsed edge image inconsistent with vertex map");
        } else {
            const Edge& ce = codomain.edge(entry.edge);
            VertexId from = entry.aligned ? ce.u : ce.v;
            VertexId to = entry.aligned ? ce.v : ce.u;
            if (iu != from || iv != to)
                throw std::invalid_argument("edge image inconsistent with vertex map");
        }
    }

    // Column index per codomain cotree edge; sign convention per orientation.
    std::vector<int> column(static_cast<size_t>(codomain.edge_count()) + 1, -1);
    std::vector<int> orient_sign(static_cast<size_t>(codomain.edge_count()) + 1, 1);
    for (size_t j = 0; j < ctree.cotree.size(); ++j) {
        const OrientedEdge& oe = ctree.cotree[j];
        column[static_cast<size_t>(oe.id)] = static_cast<int>(j);
        const Edge& ce = codomain.edge(oe.id);
        orient_sign[static_cast<size_t>(oe.id)] = (oe.tail == ce.u) ? 1 : -1;
    }

    std::vector<ClosedWalk> cycles = fundamental_cycles(domain, dtree);
    IntMatrix m(cycles.size(), std::vector<long long>(ctree.cotree.size(), 0));
    for (size_t i = 0; i < cycles.size(); ++i) {
        for (const WalkStep& step : cycles[i].steps) {
            const EdgeImageEntry& entry = emap[static_cast<size_t>(step.edge)];
            if (entry.edge == 0) continue;
            int col = column[static_cast<size_t>(entry.edge)];
            if (col < 0) continue;  // image lies on a codomain tree edge
            // Direction of the image traversal relative to the stored order,
            // then relative to the chosen cotree orientation.
            int image_forward = (step.forward == entry.aligned) ? 1 : -1;
            m[i][static_cast<size_t>(col)] += image_forward * orient_sign[static_cast<size_t>(entry.edge)];
        }
    }
    return m;
}

EdgeImage edge_image_of_coloring(const MultiGraph& g, const Coloring& f, const ColorGraph& target) {
    EdgeImage emap(static_cast<size_t>(g.edge_count()) + 1);
    for (const Edge& e : g.edges()) {
        Color a = f.of(e.u), b = f.of(e.v);
        EdgeImageEntry& entry = emap[static_cast<size_t>(e.id)];
        if (a == b) {
            entry.edge = 0;
            entry.vertex = a;
        } else {
            entry.edge = target.edge_between(a, b);
            entry.aligned = a < b;  // K_k stores every edge low -> high
        }
    }
    return emap;
}

IntMatrix coloring_induced_matrix(const MultiGraph& g, const Coloring& f,
                                  const SpanningTree& dtree, const ColorGraph& target) {
    std::vector<VertexId> vmap(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (VertexId v = 1; v <= g.vertex_count(); ++v) vmap[static_cast<size_t>(v)] = f.of(v);
    return induced_matrix(g, dtree, target.graph, target.tree, vmap,
                          edge_image_of_coloring(g, f, target));
}

IntMatrix coloring_induced_matrix(const MultiGraph& g, const Coloring& f) {
    return coloring_induced_matrix(g, f, spanning_tree(g), make_color_graph(f.k));
}

bool is_zero_matrix(const IntMatrix& m) {
    for (const auto& row : m)
        for (long long x : row)
            if (x != 0) return false;
    return true;
}

bool is_null_coloring(const MultiGraph& g, const Coloring& f) {
    return is_zero_matrix(coloring_induced_matrix(g, f));
}

std::vector<BigInt> smith_normal_form(const IntMatrix& m) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

    std::vector<BigInt> divisors;
    size_t top = 0;
    while (top < rows && top < cols) {
        // Find a pivot of minimal absolute value in the remaining block.
        size_t pi = top, pj = top;
        BigInt best = 0;
        for (size_t i = top; i < rows; ++i)
            for (size_t j = top; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                BigInt mag = abs(a[i][j]);
                if (best == 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        std::swap(a[top], a[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][top], a[i][pj]);

        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (size_t i = top + 1; i < rows; ++i) {
                if (a[i][top] == 0) continue;
                BigInt q = a[i][top] / a[top][top];
                for (size_t j = top; j < cols; ++j) a[i][j] -= q * a[top][j];
                if (a[i][top] != 0) {
                    std::swap(a[top], a[i]);  // strictly smaller remainder becomes the pivot
                    reduced = false;
                }
            }
            for (size_t j = top + 1; j < cols; ++j) {
                if (a[top][j] == 0) continue;
                BigInt q = a[top][j] / a[top][top];
                for (size_t i = top; i < rows; ++i) a[i][j] -= q * a[i][top];
                if (a[top][j] != 0) {
                    for (size_t i = top; i < rows; ++i) std::swap(a[i][top], a[i][j]);
                    reduced = false;
                }
            }
        }
        // Pivot must divide every remaining entry; if not, fold the offender in.
        for (size_t i = top + 1; i < rows && reduced; ++i)
            for (size_t j = top + 1; j < cols; ++j)
                if (a[i][j] % a[top][top] != 0) {
                    for (size_t jj = top; jj < cols; ++jj) a[top][jj] += a[i][jj];
                    reduced = false;
                    break;
                }
        if (!reduced) continue;  // re-run elimination at the same corner

        if (a[top][top] < 0) a[top][top] = -a[top][top];
        divisors.push_back(a[top][top]);
        ++top;
    }
    return divisors;
}

bool is_epimorphism(const IntMatrix& m, int codomain_rank) {
    if (codomain_rank < 0) throw std::invalid_argument("codomain rank must be non-negative");
    std::vector<BigInt> divisors = smith_normal_form(m);
    if (static_cast<int>(divisors.size()) != codomain_rank) return false;
    for (const BigInt& d : divisors)
        if (d != 1) return false;
    return true;
}

int ij_edge_count_on_walk(const MultiGraph& g, const Coloring& f, const ClosedWalk& w,
                          Color i, Color j) {
    if (i == j) throw std::invalid_argument("the two colors must differ");
    int count = 0;
    for (const WalkStep& step : w.steps) {
        const Edge& e = g.edge(step.edge);
        Color a = f.of(e.u), b = f.of(e.v);
        if ((a == i && b == j) || (a == j && b == i)) ++count;
    }
    return count;
}

IntMatrix identification_induced_matrix(const MultiGraph& g, const Identification& ident) {
    EdgeImage emap(static_cast<size_t>(g.edge_count()) + 1);
    for (const Edge& e : g.edges()) {
        EdgeImageEntry& entry = emap[static_cast<size_t>(e.id)];
        EdgeId image = ident.edge_image[static_cast<size_t>(e.id)];
        if (image == 0) {
            entry.edge = 0;
            entry.vertex = ident.vertex_map[static_cast<size_t>(e.u)];
        } else {
            entry.edge = image;
            entry.aligned = true;  // surviving edges keep their endpoint order
        }
    }
    return induced_matrix(g, spanning_tree(g), ident.graph, spanning_tree(ident.graph),
                          ident.vertex_map, emap);
}

IntMatrix identification_induced_matrix_simple(const MultiGraph& g, const Identification& ident,
                                               const Simplification& simp) {
    EdgeImage emap(static_cast<size_t>(g.edge_count()) + 1);
    for (const Edge& e : g.edges()) {
        EdgeImageEntry& entry = emap[static_cast<size_t>(e.id)];
        VertexId iu = ident.vertex_map[static_cast<size_t>(e.u)];
        VertexId iv = ident.vertex_map[static_cast<size_t>(e.v)];
        EdgeId merged = ident.edge_image[static_cast<size_t>(e.id)];
        EdgeId simple = merged == 0 ? 0 : simp.edge_image[static_cast<size_t>(merged)];
        if (simple == 0) {
            // Contracted edge or a loop of the merged graph.
            entry.edge = 0;
            entry.vertex = iu;
        } else {
            entry.edge = simple;
            entry.aligned = simp.graph.edge(simple).u == iu;
            (void)iv;
        }
    }
    return induced_matrix(g, spanning_tree(g), simp.graph, spanning_tree(simp.graph),
                          ident.vertex_map, emap);
}

}  // namespace nullcolor
