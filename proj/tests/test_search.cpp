#include "doctest.h"
#include "nullcolor/generators.hpp"
#include "nullcolor/homology.hpp"
#include "nullcolor/search.hpp"
#include "oracles.hpp"

using namespace nullcolor;

TEST_CASE("bound formulas") {
    CHECK(bound(4, SurfaceKind::Sphere) == 2);
    CHECK(bound(10, SurfaceKind::Sphere) == 6);
    CHECK(bound(6, SurfaceKind::ProjectivePlane) == 4);
    CHECK(bound(12, SurfaceKind::Sphere) == 7);
    CHECK_THROWS_AS(bound(3, SurfaceKind::Sphere), std::invalid_argument);
}

TEST_CASE("exists_non_rainbow_k") {
    Triangulation t = tetrahedron();
    auto two = exists_non_rainbow_k(t, 2);
    REQUIRE(two.has_value());
    CHECK(two->k == 2);
    // Lexicographically smallest witness: {1,2,3} vs {4}.
    CHECK(two->color == std::vector<Color>{0, 1, 1, 1, 2});
    CHECK(is_non_rainbow(t, *two));

    SUBCASE("no rainbow-free 3-coloring of K4, against a direct scan") {
        CHECK(!exists_non_rainbow_k(t, 3).has_value());
        bool found = false;
        oracles::for_each_rgs(4, [&](const std::vector<int>& rgs, int k) {
            if (k == 3 && is_non_rainbow(t, make_coloring(t, rgs))) found = true;
        });
        CHECK(!found);
    }

    auto mono = exists_non_rainbow_k(t, 1);
    REQUIRE(mono.has_value());
    CHECK(mono->k == 1);

    CHECK_THROWS_AS(exists_non_rainbow_k(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(exists_non_rainbow_k(t, 5), std::invalid_argument);
}

TEST_CASE("budget exhaustion is distinct from absence") {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    CHECK_THROWS_AS(exists_non_rainbow_k(octahedron(), 3, tiny), BudgetExhausted);
    SearchBudget no_vertices;
    no_vertices.max_vertices = 5;
    CHECK_THROWS_AS(chi_f(octahedron(), no_vertices), BudgetExhausted);
}

TEST_CASE("chi_f on the catalog") {
    BoundReport k4 = chi_f(tetrahedron());
    CHECK(k4.chi_f == 2);
    CHECK(k4.bound_value == 2);
    CHECK(k4.tight);

    BoundReport bp = chi_f(bipyramid(3));
    CHECK(bp.chi_f == 3);
    CHECK(is_non_rainbow(bipyramid(3), bp.witness));

    BoundReport octa = chi_f(octahedron());
    CHECK(octa.chi_f == 3);
    CHECK(octa.chi_f == oracles::brute_chi_f(octahedron()));
    CHECK(octa.witness.color == std::vector<Color>{0, 1, 1, 1, 2, 1, 3});

    BoundReport proj = chi_f(projective_base());
    CHECK(proj.bound_value == 4);
    CHECK(proj.chi_f == oracles::brute_chi_f(projective_base()));
    CHECK(proj.chi_f == 2);
}

TEST_CASE("chi_f equals the exhaustive scan on small triangulations") {
    std::vector<Triangulation> catalog = {tetrahedron(), bipyramid(3), stacked(5), stacked(6),
                                          bipyramid(4), octahedron(), projective_base(),
                                          projective_family(7)};
    for (const Triangulation& t : catalog) {
        BoundReport fast = chi_f(t);
        CHECK(fast.chi_f == oracles::brute_chi_f(t));
        CHECK(is_non_rainbow(t, fast.witness));
        CHECK(fast.witness.k == fast.chi_f);

        BoundReport defensive = verify_bound(t);
        CHECK(defensive.chi_f == fast.chi_f);
        CHECK(defensive.chi_f <= defensive.bound_value);
        CHECK(defensive.witness.color == fast.witness.color);
    }
}

TEST_CASE("monotonicity: rainbow-free colorings exist strictly below chi_f") {
    std::vector<Triangulation> catalog = {tetrahedron(), bipyramid(3), octahedron(), stacked(7),
                                          projective_base()};
    for (const Triangulation& t : catalog) {
        int top = chi_f(t).chi_f;
        for (int k = 1; k <= top; ++k) CHECK(exists_non_rainbow_k(t, k).has_value());
    }
}

TEST_CASE("max_null frozen cases") {
    SUBCASE("trees take every vertex to its own class") {
        MultiGraph tree = build_graph(4, {{1, 2}, {2, 3}, {3, 4}});
        auto [k, witness] = max_null(tree);
        CHECK(k == 4);
        CHECK(witness.color == std::vector<Color>{0, 1, 2, 3, 4});
    }
    SUBCASE("triangle: two classes, since any 2-coloring is null") {
        MultiGraph tri = build_graph(3, {{1, 2}, {2, 3}, {1, 3}});
        auto [k, witness] = max_null(tri);
        CHECK(k == 2);
        CHECK(witness.color == std::vector<Color>{0, 1, 1, 2});
        CHECK(is_null_coloring(tri, witness));
        CHECK(oracles::null_by_kernel(tri, witness));
        // Exhaustive cross-check: no null coloring with three classes.
        oracles::for_each_rgs(3, [&](const std::vector<int>& rgs, int classes) {
            if (classes == 3) CHECK(!oracles::null_by_kernel(tri, make_coloring(tri, rgs)));
        });
    }
    SUBCASE("C4 reaches three classes") {
        MultiGraph c4 = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
        auto [k, witness] = max_null(c4);
        CHECK(k == 3);
        CHECK(witness.color == std::vector<Color>{0, 1, 2, 1, 3});
        CHECK(oracles::null_by_kernel(c4, witness));
        oracles::for_each_rgs(4, [&](const std::vector<int>& rgs, int classes) {
            if (classes == 4) CHECK(!oracles::null_by_kernel(c4, make_coloring(c4, rgs)));
        });
    }
}

TEST_CASE("max_null agrees with the kernel oracle exhaustively") {
    for (int n = 1; n <= 5; ++n) {
        oracles::for_each_connected_graph(n, [&](const MultiGraph& g) {
            int expected = 0;
            oracles::for_each_rgs(n, [&](const std::vector<int>& rgs, int k) {
                if (k > expected && oracles::null_by_kernel(g, make_coloring(g, rgs)))
                    expected = k;
            });
            CHECK(max_null(g).first == expected);
        });
    }
}

TEST_CASE("is_maximal_null") {
    MultiGraph tree = build_graph(3, {{1, 2}, {2, 3}});
    CHECK(is_maximal_null(tree, make_coloring(tree, {1, 2, 3})));
    CHECK(!is_maximal_null(tree, make_coloring(tree, {1, 1, 1})));

    MultiGraph tri = build_graph(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(!is_maximal_null(tri, make_coloring(tri, {1, 1, 1})));  // {1,1,2} is null and larger
    CHECK(is_maximal_null(tri, make_coloring(tri, {1, 1, 2})));
    CHECK_THROWS_AS(is_maximal_null(tri, make_coloring(tri, {1, 2, 3})), std::invalid_argument);
}

TEST_CASE("maximal non-rainbow equals maximal null on triangulations") {
    std::vector<Triangulation> catalog = {tetrahedron(), bipyramid(3), stacked(6), octahedron(),
                                          projective_base()};
    for (const Triangulation& t : catalog)
        CHECK(max_null(t.skeleton()).first == chi_f(t).chi_f);
}

TEST_CASE("merging same-colored close vertices preserves null maximality") {
    SearchBudget budget;
    for (int n = 2; n <= 5; ++n) {
        oracles::for_each_connected_graph(n, [&](const MultiGraph& g) {
            auto [best_k, best_witness] = max_null(g, budget);
            oracles::for_each_rgs(n, [&](const std::vector<int>& rgs, int k) {
                if (k != best_k) return;
                Coloring f = make_coloring(g, rgs);
                if (!is_null_coloring(g, f)) return;
                for (VertexId u = 1; u <= n; ++u)
                    for (VertexId v = u + 1; v <= n; ++v) {
                        if (f.of(u) != f.of(v)) continue;
                        auto d = distance(g, u, v);
                        if (!d || *d > 2) continue;
                        Identification ident = identify_vertices(g, u, v);
                        std::vector<int> merged(static_cast<size_t>(ident.graph.vertex_count()));
                        for (VertexId w = 1; w <= n; ++w)
                            merged[static_cast<size_t>(
                                       ident.vertex_map[static_cast<size_t>(w)]) - 1] = f.of(w);
                        Coloring f2 = make_coloring(ident.graph, merged);
                        CHECK(f2.k == f.k);
                        CHECK(is_null_coloring(ident.graph, f2));
                        CHECK(is_maximal_null(ident.graph, f2, budget));
                    }
            });
        });
    }
}

TEST_CASE("witnesses and reports are deterministic") {
    Triangulation t = octahedron();
    BoundReport a = chi_f(t);
    BoundReport b = chi_f(t);
    CHECK(a.witness.color == b.witness.color);
    CHECK(a.chi_f == b.chi_f);
}
