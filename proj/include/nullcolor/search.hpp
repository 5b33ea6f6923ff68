#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "nullcolor/coloring.hpp"
#include "nullcolor/triangulation.hpp"

namespace nullcolor {

/// Limits for the exact searches. The node limit counts color assignments
/// across one whole operation; exceeding either limit raises
/// BudgetExhausted, which is always kept distinct from "no such coloring".
struct SearchBudget {
    int max_vertices = 64;
    long long max_nodes = 100'000'000;
};

class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// floor((2n-1)/3) on the sphere, floor((2n+1)/3) on the projective plane.
int bound(int n, SurfaceKind kind);

/// Lexicographically smallest rainbow-free coloring with exactly k classes,
/// or nullopt if none exists. Set partitions are enumerated as restricted
/// growth strings in vertex order; a branch dies as soon as a fully colored
/// face is rainbow or the remaining vertices cannot reach k classes.
std::optional<Coloring> exists_non_rainbow_k(const Triangulation& t, int k,
                                             const SearchBudget& budget = {});

struct BoundReport {
    int n = 0;
    SurfaceKind kind = SurfaceKind::Sphere;
    int chi_f = 0;
    Coloring witness;
    int bound_value = 0;
    bool tight = false;
};

/// Largest k with a rainbow-free k-coloring, with the lexicographically
/// smallest witness. Descends from the theoretical bound (or from n in
/// defensive mode, which can detect a bound violation on its own).
BoundReport chi_f(const Triangulation& t, const SearchBudget& budget = {},
                  bool defensive = false);

/// Enumerate every null coloring of g in lexicographic restricted-growth
/// order. A branch is pruned once a completed fundamental cycle carries a
/// nonzero signed color-pair traversal count.
void for_each_null_coloring(const MultiGraph& g, const SearchBudget& budget,
                            const std::function<void(const Coloring&)>& visit);

/// Maximum number of colors over all null colorings, with the
/// lexicographically smallest witness attaining it.
std::pair<int, Coloring> max_null(const MultiGraph& g, const SearchBudget& budget = {});

/// True iff no null coloring of g uses more colors than f. f must be null.
bool is_maximal_null(const MultiGraph& g, const Coloring& f, const SearchBudget& budget = {});

/// Defensive chi_f plus the bound comparison; a report with
/// chi_f > bound_value is a counterexample certificate.
BoundReport verify_bound(const Triangulation& t, const SearchBudget& budget = {});

}  // namespace nullcolor
