#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "nullcolor/multigraph.hpp"

namespace nullcolor {

/// Unordered triple of distinct vertices, stored sorted.
struct Face {
    std::array<VertexId, 3> v{};

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face&, const Face&) = default;
};

Face make_face(VertexId a, VertexId b, VertexId c);

enum class SurfaceKind { Sphere, ProjectivePlane };

const char* surface_name(SurfaceKind kind);

enum class TriangulationError {
    FaceNotTriple,
    DuplicateFace,
    EdgeNotInTwoFaces,
    VertexLinkNotSingleCycle,
    Disconnected,
    UnsupportedSurface,
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(TriangulationError code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    TriangulationError code() const { return code_; }

private:
    TriangulationError code_;
};

/// Face-list model of a maximal graph embedded on the sphere or the
/// projective plane. Construct through validate_triangulation; instances
/// are immutable and always satisfy the manifold conditions.
class Triangulation {
public:
    Triangulation() = default;  // empty placeholder; real instances come from validation

    int vertex_count() const { return n_; }
    int edge_count() const { return skeleton_.edge_count(); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    const std::vector<Face>& faces() const { return faces_; }
    const MultiGraph& skeleton() const { return skeleton_; }
    SurfaceKind kind() const { return kind_; }
    bool has_face(const Face& f) const;

private:
    friend Triangulation validate_triangulation(int n, const std::vector<Face>& faces);
    Triangulation(int n, std::vector<Face> faces, MultiGraph skeleton, SurfaceKind kind)
        : n_(n), faces_(std::move(faces)), skeleton_(std::move(skeleton)), kind_(kind) {}

    int n_ = 0;
    std::vector<Face> faces_;
    MultiGraph skeleton_;
    SurfaceKind kind_ = SurfaceKind::Sphere;
};

/// Checks the manifold conditions (every edge in exactly two faces, every
/// vertex link a single cycle, connected skeleton) and classifies the
/// surface by Euler characteristic; chi must be 2 (sphere) or 1
/// (projective plane).
Triangulation validate_triangulation(int n, const std::vector<Face>& faces);

SurfaceKind classify_surface(const Triangulation& t);

/// 2n - 4 on the sphere (n >= 4), 2n - 2 on the projective plane (n >= 6).
int face_count_expected(int n, SurfaceKind kind);

/// Replace face {v1,v2,v3} by three faces through a new vertex n + 1.
Triangulation subdivide_face(const Triangulation& t, const Face& f);

}  // namespace nullcolor
