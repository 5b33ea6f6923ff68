#include <set>

#include "doctest.h"
#include "nullcolor/generators.hpp"
#include "nullcolor/homology.hpp"
#include "oracles.hpp"

using namespace nullcolor;

TEST_CASE("catalog solids") {
    Triangulation tet = tetrahedron();
    CHECK(tet.vertex_count() == 4);
    CHECK(tet.face_count() == 4);

    Triangulation octa = octahedron();
    CHECK(octa.vertex_count() == 6);
    CHECK(octa.face_count() == 8);

    Triangulation ico = icosahedron();
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.face_count() == 20);
    CHECK(ico.kind() == SurfaceKind::Sphere);

    Triangulation bp = bipyramid(3);
    CHECK(bp.vertex_count() == 5);
    CHECK(bp.face_count() == 6);
    CHECK_THROWS_AS(bipyramid(2), std::invalid_argument);
}

TEST_CASE("stacked family") {
    CHECK(stacked(4).faces() == tetrahedron().faces());
    Triangulation s5 = stacked(5);
    CHECK(s5.vertex_count() == 5);
    CHECK(s5.face_count() == 6);
    Triangulation s10 = stacked(10);
    CHECK(s10.vertex_count() == 10);
    CHECK(s10.face_count() == 16);
    CHECK_THROWS_AS(stacked(3), std::invalid_argument);
    CHECK_THROWS_AS(stacked(6, {0, 99}), std::invalid_argument);

    // Alternative face choices give valid but different triangulations.
    Triangulation alt = stacked(6, {1, 3});
    CHECK(alt.vertex_count() == 6);
    CHECK(alt.face_count() == 8);
}

TEST_CASE("projective base is the lexicographically first valid face list") {
    Triangulation base = projective_base();
    CHECK(base.vertex_count() == 6);
    CHECK(base.edge_count() == 15);  // complete skeleton
    CHECK(base.face_count() == 10);
    CHECK(base.kind() == SurfaceKind::ProjectivePlane);

    // Exhaustive oracle: scan all 10-subsets of the 20 triples of {1..6} in
    // lexicographic order and find the first that validates.
    std::vector<Face> triples;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) triples.push_back(make_face(a, b, c));
    REQUIRE(triples.size() == 20);
    std::vector<Face> first_valid;
    int valid_count = 0;
    std::vector<int> pick(10);
    std::function<void(int, int)> scan = [&](int start, int depth) {
        if (depth == 10) {
            std::vector<Face> candidate;
            for (int i : pick) candidate.push_back(triples[static_cast<size_t>(i)]);
            try {
                Triangulation t = validate_triangulation(6, candidate);
                if (t.kind() == SurfaceKind::ProjectivePlane) {
                    ++valid_count;
                    if (first_valid.empty()) first_valid = candidate;
                }
            } catch (const ValidationError&) {
            }
            return;
        }
        for (int i = start; i + (10 - depth) <= 20; ++i) {
            pick[static_cast<size_t>(depth)] = i;
            scan(i + 1, depth + 1);
        }
    };
    scan(0, 0);
    CHECK(valid_count == 12);
    CHECK(first_valid == base.faces());
}

TEST_CASE("projective family") {
    CHECK(projective_family(6).faces() == projective_base().faces());
    CHECK(projective_family(7).face_count() == 12);
    Triangulation big = projective_family(16);
    CHECK(big.vertex_count() == 16);
    CHECK(big.face_count() == 30);
    CHECK_THROWS_AS(projective_family(5), std::invalid_argument);
}

TEST_CASE("sphere witnesses") {
    SUBCASE("small cases") {
        ExtremalWitness w4 = extremal(4, SurfaceKind::Sphere);
        CHECK(w4.colors == 2);
        CHECK(is_non_rainbow(w4.triangulation, w4.coloring));

        ExtremalWitness w5 = extremal(5, SurfaceKind::Sphere);
        CHECK(w5.colors == 3);
        CHECK(is_non_rainbow(w5.triangulation, w5.coloring));
    }
    SUBCASE("n = 9 runs the subdivision scheme") {
        ExtremalWitness w = extremal(9, SurfaceKind::Sphere);
        CHECK(w.colors == 5);
        CHECK(w.base_size == 5);
        CHECK(w.subdivided.size() == 4);
        CHECK(w.constructive);
        CHECK(w.triangulation.vertex_count() == 9);
    }
    SUBCASE("every witness meets the bound and is null") {
        for (int n = 4; n <= 24; ++n) {
            ExtremalWitness w = extremal(n, SurfaceKind::Sphere);
            CHECK(w.colors == bound(n, SurfaceKind::Sphere));
            CHECK(w.triangulation.vertex_count() == n);
            CHECK(is_non_rainbow(w.triangulation, w.coloring));
            CHECK(is_null_coloring(w.triangulation.skeleton(), w.coloring));
        }
    }
    CHECK_THROWS_AS(extremal(3, SurfaceKind::Sphere), std::invalid_argument);
}

TEST_CASE("projective witnesses") {
    SUBCASE("constructive range") {
        ExtremalWitness w16 = extremal(16, SurfaceKind::ProjectivePlane);
        CHECK(w16.colors == 11);
        CHECK(w16.base_size == 6);
        CHECK(w16.subdivided.size() == 10);
        CHECK(w16.constructive);

        ExtremalWitness w14 = extremal(14, SurfaceKind::ProjectivePlane);
        CHECK(w14.colors == 9);
        CHECK(is_non_rainbow(w14.triangulation, w14.coloring));
    }
    SUBCASE("search fallback below 14 vertices") {
        ExtremalWitness w = extremal(7, SurfaceKind::ProjectivePlane);
        CHECK(!w.constructive);
        CHECK(w.triangulation.vertex_count() == 7);
        CHECK(is_non_rainbow(w.triangulation, w.coloring));
        CHECK(w.colors == oracles::brute_chi_f(w.triangulation));
    }
    CHECK_THROWS_AS(extremal(5, SurfaceKind::ProjectivePlane), std::invalid_argument);
}

TEST_CASE("splitting a face twice under the one-color scheme makes a rainbow face") {
    // Distinct base faces keep the scheme rainbow-free; re-splitting a face
    // produced by an earlier split does not.
    Triangulation base = tetrahedron();
    Face target = base.faces()[0];
    Triangulation once = subdivide_face(base, target);
    // Vertex 5 sits inside the old face; split one of its new faces.
    Face nested = make_face(5, target.v[0], target.v[1]);
    REQUIRE(once.has_face(nested));
    Triangulation twice = subdivide_face(once, nested);
    std::vector<int> raw(6, 1);
    raw[4] = 2;  // first new vertex
    raw[5] = 3;  // second new vertex
    Coloring f = make_coloring(twice, raw);
    auto rainbow = rainbow_faces(twice, f);
    CHECK(!rainbow.empty());
    // The offending face joins both new vertices to a base vertex.
    bool offender = false;
    for (const Face& face : rainbow)
        if (face == make_face(5, 6, target.v[0]) || face == make_face(5, 6, target.v[1]))
            offender = true;
    CHECK(offender);

    // Splitting two distinct base faces instead stays rainbow-free.
    Face other = base.faces()[1];
    Triangulation distinct = subdivide_face(subdivide_face(base, target), other);
    Coloring g = make_coloring(distinct, raw);
    CHECK(is_non_rainbow(distinct, g));
}

TEST_CASE("generated triangulations all validate with the expected counts") {
    std::vector<Triangulation> all = {tetrahedron(), octahedron(), icosahedron()};
    for (int q = 3; q <= 7; ++q) all.push_back(bipyramid(q));
    for (int n = 4; n <= 10; ++n) all.push_back(stacked(n));
    for (int n = 6; n <= 10; ++n) all.push_back(projective_family(n));
    for (const Triangulation& t : all) {
        Triangulation revalidated = validate_triangulation(t.vertex_count(), t.faces());
        CHECK(revalidated.kind() == t.kind());
        CHECK(t.face_count() == face_count_expected(t.vertex_count(), t.kind()));
        CHECK(3 * t.face_count() == 2 * t.edge_count());
    }
}
