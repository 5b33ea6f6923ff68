#pragma once

#include <vector>

#include "nullcolor/coloring.hpp"
#include "nullcolor/search.hpp"
#include "nullcolor/triangulation.hpp"

namespace nullcolor {

Triangulation tetrahedron();
Triangulation octahedron();
Triangulation icosahedron();

/// Double pyramid over a q-cycle: vertices 1..q on the equator, apexes
/// q+1 and q+2. Requires q >= 3.
Triangulation bipyramid(int q);

/// Tetrahedron plus n - 4 face subdivisions. face_choices[i] is the index
/// of the face to split at step i (default: always face 0).
Triangulation stacked(int n, const std::vector<int>& face_choices = {});

/// The complete graph on six vertices triangulating the projective plane:
/// 10 faces, 15 edges, Euler characteristic 1.
Triangulation projective_base();

/// projective_base plus n - 6 face subdivisions, as in stacked.
Triangulation projective_family(int n, const std::vector<int>& face_choices = {});

/// A triangulation together with a rainbow-free coloring meeting the color
/// bound whenever the subdivision construction applies.
struct ExtremalWitness {
    Triangulation triangulation;
    Coloring coloring;
    int colors = 0;
    int base_size = 0;             // vertex count of the base triangulation
    std::vector<Face> subdivided;  // base faces split, in order
    bool constructive = false;     // false when the coloring came from search
};

/// Sharp witnesses. Sphere: every n >= 4 is constructive (small n by
/// explicit colorings, n >= 6 by splitting bound(n)-1 distinct faces of a
/// stacked base and giving each new vertex a fresh color). Projective
/// plane: constructive for n >= 14; for 6 <= n <= 13 no simple base of the
/// required size exists, so the witness is the exact search optimum and
/// need not meet the bound.
ExtremalWitness extremal(int n, SurfaceKind kind, const SearchBudget& budget = {});

}  // namespace nullcolor
