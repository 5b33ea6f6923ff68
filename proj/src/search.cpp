#include "nullcolor/search.hpp"

#include <algorithm>
#include <map>

#include "nullcolor/homology.hpp"

namespace nullcolor {

int bound(int n, SurfaceKind kind) {
    if (n < 4) throw std::invalid_argument("the bound needs n >= 4");
    return kind == SurfaceKind::Sphere ? (2 * n - 1) / 3 : (2 * n + 1) / 3;
}

namespace {

void check_vertex_budget(int n, const SearchBudget& budget) {
    if (n > budget.max_vertices)
        throw BudgetExhausted("vertex count " + std::to_string(n) + " exceeds the budget's " +
                              std::to_string(budget.max_vertices));
}

void spend_node(long long& nodes_left) {
    if (--nodes_left < 0) throw BudgetExhausted("search node budget exhausted");
}

Coloring coloring_from_rgs(const std::vector<int>& rgs, int k) {
    Coloring f;
    f.k = k;
    f.color.assign(rgs.size() + 1, 0);
    std::copy(rgs.begin(), rgs.end(), f.color.begin() + 1);
    return f;
}

struct RainbowSearch {
    const Triangulation& t;
    int n;
    int k;
    long long& nodes_left;
    std::vector<std::vector<int>> faces_by_max;  // face indices keyed by largest vertex
    std::vector<int> rgs;                        // rgs[v-1] = color of vertex v

    RainbowSearch(const Triangulation& tri, int target_k, long long& nodes)
        : t(tri), n(tri.vertex_count()), k(target_k), nodes_left(nodes) {
        faces_by_max.assign(static_cast<size_t>(n) + 1, {});
        for (size_t i = 0; i < t.faces().size(); ++i)
            faces_by_max[static_cast<size_t>(t.faces()[i].v[2])].push_back(static_cast<int>(i));
        rgs.assign(static_cast<size_t>(n), 0);
    }

    bool face_ok(int face_index) const {
        const Face& f = t.faces()[static_cast<size_t>(face_index)];
        int a = rgs[static_cast<size_t>(f.v[0]) - 1];
        int b = rgs[static_cast<size_t>(f.v[1]) - 1];
        int c = rgs[static_cast<size_t>(f.v[2]) - 1];
        return a == b || b == c || a == c;
    }

    bool dfs(int v, int used) {
        if (v > n) return used == k;
        if (used + (n - v + 1) < k) return false;
        int limit = std::min(used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            spend_node(nodes_left);
            rgs[static_cast<size_t>(v) - 1] = c;
            bool rainbow = false;
            for (int fi : faces_by_max[static_cast<size_t>(v)])
                if (!face_ok(fi)) {
                    rainbow = true;
                    break;
                }
            if (!rainbow && dfs(v + 1, std::max(used, c))) return true;
        }
        rgs[static_cast<size_t>(v) - 1] = 0;
        return false;
    }
};

std::optional<Coloring> exists_non_rainbow_impl(const Triangulation& t, int k,
                                                long long& nodes_left) {
    RainbowSearch search(t, k, nodes_left);
    if (search.dfs(1, 0)) return coloring_from_rgs(search.rgs, k);
    return std::nullopt;
}

}  // namespace

std::optional<Coloring> exists_non_rainbow_k(const Triangulation& t, int k,
                                             const SearchBudget& budget) {
    if (k < 1 || k > t.vertex_count())
        throw std::invalid_argument("k must lie in 1..n");
    check_vertex_budget(t.vertex_count(), budget);
    long long nodes_left = budget.max_nodes;
    return exists_non_rainbow_impl(t, k, nodes_left);
}

BoundReport chi_f(const Triangulation& t, const SearchBudget& budget, bool defensive) {
    check_vertex_budget(t.vertex_count(), budget);
    const int n = t.vertex_count();
    const int bound_value = bound(n, t.kind());
    long long nodes_left = budget.max_nodes;
    int start = defensive ? n : std::min(bound_value, n);
    for (int k = start; k >= 1; --k) {
        if (auto witness = exists_non_rainbow_impl(t, k, nodes_left)) {
            BoundReport report;
            report.n = n;
            report.kind = t.kind();
            report.chi_f = k;
            report.witness = std::move(*witness);
            report.bound_value = bound_value;
            report.tight = k == bound_value;
            return report;
        }
    }
    throw std::logic_error("a 1-coloring is always rainbow-free");  // unreachable
}

namespace {

struct NullSearch {
    const MultiGraph& g;
    int n;
    long long& nodes_left;
    std::vector<ClosedWalk> cycles;
    std::vector<std::vector<int>> cycles_by_max;
    std::vector<int> rgs;
    const std::function<void(const Coloring&)>& visit;

    NullSearch(const MultiGraph& graph, long long& nodes,
               const std::function<void(const Coloring&)>& callback)
        : g(graph), n(graph.vertex_count()), nodes_left(nodes), visit(callback) {
        SpanningTree tree = spanning_tree(g);
        cycles = fundamental_cycles(g, tree);
        cycles_by_max.assign(static_cast<size_t>(n) + 1, {});
        for (size_t i = 0; i < cycles.size(); ++i) {
            VertexId hi = *std::max_element(cycles[i].vertices.begin(), cycles[i].vertices.end());
            cycles_by_max[static_cast<size_t>(hi)].push_back(static_cast<int>(i));
        }
        rgs.assign(static_cast<size_t>(n), 0);
    }

    // The coloring maps the cycle to a closed walk in a complete graph on
    // the colors; the walk is null-homotopic iff every color pair has net
    // signed traversal count zero.
    bool cycle_null(int index) const {
        const ClosedWalk& w = cycles[static_cast<size_t>(index)];
        std::map<std::pair<int, int>, int> net;
        for (size_t s = 0; s < w.steps.size(); ++s) {
            int a = rgs[static_cast<size_t>(w.vertices[s]) - 1];
            int b = rgs[static_cast<size_t>(w.vertices[s + 1]) - 1];
            if (a == b) continue;
            net[{std::min(a, b), std::max(a, b)}] += a < b ? 1 : -1;
        }
        for (const auto& [pair, count] : net)
            if (count != 0) return false;
        return true;
    }

    void dfs(int v, int used) {
        if (v > n) {
            visit(coloring_from_rgs(rgs, used));
            return;
        }
        for (int c = 1; c <= used + 1; ++c) {
            spend_node(nodes_left);
            rgs[static_cast<size_t>(v) - 1] = c;
            bool ok = true;
            for (int ci : cycles_by_max[static_cast<size_t>(v)])
                if (!cycle_null(ci)) {
                    ok = false;
                    break;
                }
            if (ok) dfs(v + 1, std::max(used, c));
        }
        rgs[static_cast<size_t>(v) - 1] = 0;
    }
};

}  // namespace

void for_each_null_coloring(const MultiGraph& g, const SearchBudget& budget,
                            const std::function<void(const Coloring&)>& visit) {
    check_vertex_budget(g.vertex_count(), budget);
    if (g.vertex_count() == 0) return;
    long long nodes_left = budget.max_nodes;
    NullSearch search(g, nodes_left, visit);
    search.dfs(1, 0);
}

std::pair<int, Coloring> max_null(const MultiGraph& g, const SearchBudget& budget) {
    if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");
    int best_k = 0;
    std::map<int, Coloring> first_witness;
    for_each_null_coloring(g, budget, [&](const Coloring& f) {
        if (!first_witness.count(f.k)) first_witness.emplace(f.k, f);
        best_k = std::max(best_k, f.k);
    });
    return {best_k, first_witness.at(best_k)};
}

bool is_maximal_null(const MultiGraph& g, const Coloring& f, const SearchBudget& budget) {
    if (!is_null_coloring(g, f)) throw std::invalid_argument("coloring is not null");
    return max_null(g, budget).first == f.k;
}

BoundReport verify_bound(const Triangulation& t, const SearchBudget& budget) {
    BoundReport report = chi_f(t, budget, /*defensive=*/true);
    report.tight = report.chi_f == report.bound_value;
    return report;
}

}  // namespace nullcolor
