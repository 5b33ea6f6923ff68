#include "nullcolor/generators.hpp"

#include <cassert>
#include <stdexcept>

namespace nullcolor {

namespace {

Triangulation from_triples(int n, const std::vector<std::array<int, 3>>& triples) {
    std::vector<Face> faces;
    faces.reserve(triples.size());
    for (const auto& t : triples) faces.push_back(make_face(t[0], t[1], t[2]));
    return validate_triangulation(n, faces);
}

}  // namespace

Triangulation tetrahedron() {
    return from_triples(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

Triangulation octahedron() {
    // Equator 3-4-5-6, apexes 1 and 2.
    return from_triples(6, {{1, 3, 4},
                            {1, 4, 5},
                            {1, 5, 6},
                            {1, 3, 6},
                            {2, 3, 4},
                            {2, 4, 5},
                            {2, 5, 6},
                            {2, 3, 6}});
}

Triangulation icosahedron() {
    // Apex 1 over pentagon 2..6, apex 12 under pentagon 7..11, antiprism band.
    std::vector<std::array<int, 3>> triples;
    auto a = [](int i) { return 2 + (i % 5); };
    auto b = [](int i) { return 7 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
        triples.push_back({1, a(i), a(i + 1)});
        triples.push_back({12, b(i), b(i + 1)});
        triples.push_back({a(i), a(i + 1), b(i)});
        triples.push_back({b(i), b(i + 1), a(i + 1)});
    }
    return from_triples(12, triples);
}

Triangulation bipyramid(int q) {
    if (q < 3) throw std::invalid_argument("bipyramid needs an equator of at least 3 vertices");
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < q; ++i) {
        int u = i + 1, v = (i + 1) % q + 1;
        triples.push_back({u, v, q + 1});
        triples.push_back({u, v, q + 2});
    }
    return from_triples(q + 2, triples);
}

namespace {

Triangulation grow(Triangulation t, int subdivisions, const std::vector<int>& face_choices) {
    for (int step = 0; step < subdivisions; ++step) {
        int choice = step < static_cast<int>(face_choices.size()) ? face_choices[static_cast<size_t>(step)] : 0;
        if (choice < 0 || choice >= t.face_count())
            throw std::invalid_argument("face choice " + std::to_string(choice) +
                                        " out of range at step " + std::to_string(step));
        t = subdivide_face(t, t.faces()[static_cast<size_t>(choice)]);
    }
    return t;
}

}  // namespace

Triangulation stacked(int n, const std::vector<int>& face_choices) {
    if (n < 4) throw std::invalid_argument("stacked triangulations need n >= 4");
    return grow(tetrahedron(), n - 4, face_choices);
}

Triangulation projective_base() {
    // Lexicographically first 10-subset of the triples of {1..6} satisfying
    // the manifold conditions (exhaustive search; re-derived in the tests).
    return from_triples(6, {{1, 2, 3},
                            {1, 2, 4},
                            {1, 3, 5},
                            {1, 4, 6},
                            {1, 5, 6},
                            {2, 3, 6},
                            {2, 4, 5},
                            {2, 5, 6},
                            {3, 4, 5},
                            {3, 4, 6}});
}

Triangulation projective_family(int n, const std::vector<int>& face_choices) {
    if (n < 6) throw std::invalid_argument("projective-plane triangulations need n >= 6");
    return grow(projective_base(), n - 6, face_choices);
}

namespace {

/// Split `count` distinct faces of the base and color every base vertex 1,
/// each new vertex a fresh color. Distinctness matters: splitting a face
/// created by an earlier split would put two fresh colors on one face and
/// make it rainbow.
ExtremalWitness subdivide_and_color(Triangulation base, int count) {
    assert(count < base.face_count() || count == 0);
    ExtremalWitness w;
    w.base_size = base.vertex_count();
    w.subdivided.assign(base.faces().begin(), base.faces().begin() + count);
    Triangulation t = std::move(base);
    for (const Face& f : w.subdivided) t = subdivide_face(t, f);
    std::vector<int> raw(static_cast<size_t>(t.vertex_count()), 1);
    for (int v = w.base_size + 1; v <= t.vertex_count(); ++v)
        raw[static_cast<size_t>(v) - 1] = v - w.base_size + 1;
    w.coloring = make_coloring(t, raw);
    w.colors = w.coloring.k;
    w.triangulation = std::move(t);
    w.constructive = true;
    return w;
}

}  // namespace

ExtremalWitness extremal(int n, SurfaceKind kind, const SearchBudget& budget) {
    if (kind == SurfaceKind::Sphere) {
        if (n < 4) throw std::invalid_argument("sphere witnesses need n >= 4");
        const int m = bound(n, SurfaceKind::Sphere);
        if (n == 4) {
            ExtremalWitness w;
            w.triangulation = tetrahedron();
            w.coloring = make_coloring(w.triangulation, {1, 1, 1, 2});
            w.colors = 2;
            w.base_size = 4;
            w.constructive = true;
            return w;
        }
        if (n == 5) {
            // No 3-vertex base exists; two apex colors over a one-color equator.
            ExtremalWitness w;
            w.triangulation = bipyramid(3);
            w.coloring = make_coloring(w.triangulation, {1, 1, 1, 2, 3});
            w.colors = 3;
            w.base_size = 5;
            w.constructive = true;
            return w;
        }
        const int k = n - m + 1;
        assert(k >= 4 && m - 1 <= 2 * k - 4);
        ExtremalWitness w = subdivide_and_color(stacked(k), m - 1);
        assert(w.colors == m);
        return w;
    }

    if (n < 6) throw std::invalid_argument("projective-plane witnesses need n >= 6");
    const int m = bound(n, SurfaceKind::ProjectivePlane);
    const int k = n - m + 1;
    if (k >= 6) {
        assert(m - 1 <= 2 * k - 2);
        ExtremalWitness w = subdivide_and_color(projective_family(k), m - 1);
        assert(w.colors == m);
        return w;
    }
    // 6 <= n <= 13: the formula would need a base below six vertices, which
    // cannot be a simple projective-plane triangulation. Fall back to the
    // exact optimum over the default family member.
    ExtremalWitness w;
    w.triangulation = projective_family(n);
    BoundReport report = chi_f(w.triangulation, budget);
    w.coloring = std::move(report.witness);
    w.colors = report.chi_f;
    w.base_size = 6;
    w.constructive = false;
    return w;
}

}  // namespace nullcolor
