#include "nullcolor/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nullcolor {

Face make_face(VertexId a, VertexId b, VertexId c) {
    Face f{{a, b, c}};
    std::sort(f.v.begin(), f.v.end());
    if (f.v[0] == f.v[1] || f.v[1] == f.v[2])
        throw ValidationError(TriangulationError::FaceNotTriple,
                              "face vertices must be distinct");
    return f;
}

const char* surface_name(SurfaceKind kind) {
    return kind == SurfaceKind::Sphere ? "sphere" : "projective";
}

bool Triangulation::has_face(const Face& f) const {
    return std::find(faces_.begin(), faces_.end(), f) != faces_.end();
}

namespace {

std::string face_str(const Face& f) {
    return "{" + std::to_string(f.v[0]) + "," + std::to_string(f.v[1]) + "," +
           std::to_string(f.v[2]) + "}";
}

}  // namespace

Triangulation validate_triangulation(int n, const std::vector<Face>& faces) {
    std::vector<Face> sorted_faces;
    sorted_faces.reserve(faces.size());
    for (const Face& f : faces) {
        if (f.v[0] < 1 || f.v[2] > n)
            throw ValidationError(TriangulationError::FaceNotTriple,
                                  "face " + face_str(f) + " has a vertex outside 1.." +
                                      std::to_string(n));
        if (f.v[0] >= f.v[1] || f.v[1] >= f.v[2])
            throw ValidationError(TriangulationError::FaceNotTriple,
                                  "face " + face_str(f) + " is not three distinct vertices");
        sorted_faces.push_back(f);
    }
    {
        std::set<Face> dedup(sorted_faces.begin(), sorted_faces.end());
        if (dedup.size() != sorted_faces.size())
            throw ValidationError(TriangulationError::DuplicateFace, "duplicate face in list");
    }

    // Every vertex pair occurring in a face must occur in exactly two faces.
    std::map<std::pair<VertexId, VertexId>, int> edge_faces;
    for (const Face& f : sorted_faces) {
        edge_faces[{f.v[0], f.v[1]}]++;
        edge_faces[{f.v[0], f.v[2]}]++;
        edge_faces[{f.v[1], f.v[2]}]++;
    }
    for (const auto& [pair, count] : edge_faces)
        if (count != 2)
            throw ValidationError(TriangulationError::EdgeNotInTwoFaces,
                                  "edge (" + std::to_string(pair.first) + "," +
                                      std::to_string(pair.second) + ") lies in " +
                                      std::to_string(count) + " faces, expected 2");

    // Link of v: the edges opposite v in faces containing v must form one cycle.
    for (VertexId v = 1; v <= n; ++v) {
        std::map<VertexId, std::vector<VertexId>> link;
        for (const Face& f : sorted_faces) {
            if (f.v[0] != v && f.v[1] != v && f.v[2] != v) continue;
            std::vector<VertexId> rest;
            for (VertexId w : f.v)
                if (w != v) rest.push_back(w);
            link[rest[0]].push_back(rest[1]);
            link[rest[1]].push_back(rest[0]);
        }
        if (link.empty())
            throw ValidationError(TriangulationError::VertexLinkNotSingleCycle,
                                  "vertex " + std::to_string(v) + " lies in no face");
        for (const auto& [w, around] : link)
            if (around.size() != 2)
                throw ValidationError(TriangulationError::VertexLinkNotSingleCycle,
                                      "link of vertex " + std::to_string(v) + " is not 2-regular");
        // Walk the 2-regular link from an arbitrary start; it must visit everything.
        VertexId start = link.begin()->first;
        VertexId prev = 0, cur = start;
        size_t visited = 0;
        do {
            const auto& around = link.at(cur);
            VertexId next = (around[0] == prev) ? around[1] : around[0];
            prev = cur;
            cur = next;
            ++visited;
        } while (cur != start && visited <= link.size());
        if (visited != link.size())
            throw ValidationError(TriangulationError::VertexLinkNotSingleCycle,
                                  "link of vertex " + std::to_string(v) +
                                      " splits into more than one cycle");
    }

    std::vector<std::pair<int, int>> edge_list;
    edge_list.reserve(edge_faces.size());
    for (const auto& [pair, count] : edge_faces) edge_list.push_back(pair);
    MultiGraph skeleton = build_graph(n, edge_list);
    if (component_count(skeleton) != 1)
        throw ValidationError(TriangulationError::Disconnected, "skeleton is not connected");

    const int chi = n - skeleton.edge_count() + static_cast<int>(sorted_faces.size());
    SurfaceKind kind;
    if (chi == 2)
        kind = SurfaceKind::Sphere;
    else if (chi == 1)
        kind = SurfaceKind::ProjectivePlane;
    else
        throw ValidationError(TriangulationError::UnsupportedSurface,
                              "Euler characteristic " + std::to_string(chi) +
                                  " is neither 2 (sphere) nor 1 (projective plane)");
    return Triangulation(n, std::move(sorted_faces), std::move(skeleton), kind);
}

SurfaceKind classify_surface(const Triangulation& t) { return t.kind(); }

int face_count_expected(int n, SurfaceKind kind) {
    if (kind == SurfaceKind::Sphere) {
        if (n < 4) throw std::invalid_argument("sphere triangulations need n >= 4");
        return 2 * n - 4;
    }
    if (n < 6) throw std::invalid_argument("projective-plane triangulations need n >= 6");
    return 2 * n - 2;
}

Triangulation subdivide_face(const Triangulation& t, const Face& f) {
    if (!t.has_face(f))
        throw std::invalid_argument("face " + face_str(f) + " is not a face of the triangulation");
    const VertexId u = t.vertex_count() + 1;
    std::vector<Face> faces;
    faces.reserve(t.faces().size() + 2);
    for (const Face& g : t.faces()) {
        if (g == f) continue;
        faces.push_back(g);
    }
    faces.push_back(make_face(u, f.v[0], f.v[1]));
    faces.push_back(make_face(u, f.v[1], f.v[2]));
    faces.push_back(make_face(u, f.v[0], f.v[2]));
    return validate_triangulation(t.vertex_count() + 1, faces);
}

}  // namespace nullcolor
