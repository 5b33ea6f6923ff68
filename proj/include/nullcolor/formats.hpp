#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nullcolor/coloring.hpp"
#include "nullcolor/search.hpp"
#include "nullcolor/triangulation.hpp"

namespace nullcolor {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Text triangulation document: '#' comments, one "vertices N" line, then
/// one "face a b c" line per face. Returned unvalidated so callers can
/// separate parse failures from validation failures.
struct TriangulationText {
    int n = 0;
    std::vector<Face> faces;
};

TriangulationText read_triangulation_text(std::istream& in);
void write_triangulation_text(std::ostream& out, const Triangulation& t);

/// Text coloring document: '#' comments and one "color v c" line per vertex.
/// Returns raw colors with raw[v-1] belonging to vertex v.
std::vector<int> read_coloring_text(std::istream& in, int n);
void write_coloring_text(std::ostream& out, const Coloring& f);

/// One tab-separated result row:
/// id, n, m, F, surface, chi_f, bound, tight(0/1), witness colors.
struct ReportLine {
    std::string id;
    int n = 0;
    int m = 0;
    int f = 0;
    SurfaceKind kind = SurfaceKind::Sphere;
    int chi_f = 0;
    int bound_value = 0;
    bool tight = false;
    std::vector<int> witness;  // colors in vertex order

    std::string to_tsv() const;
};

ReportLine make_report_line(std::string id, const Triangulation& t, const BoundReport& report);

/// One embedded graph of a planar_code stream: neighbor lists in rotation
/// order, 1-based, rotation[0] unused.
struct PlanarCodeGraph {
    int n = 0;
    std::vector<std::vector<int>> rotation;
};

struct PlanarCodeFile {
    bool header = true;  // whether the stream carried ">>planar_code<<"
    std::vector<PlanarCodeGraph> graphs;
};

PlanarCodeFile read_planar_code(std::istream& in);
void write_planar_code(std::ostream& out, const PlanarCodeFile& file);

class FaceTracingError : public std::runtime_error {
public:
    explicit FaceTracingError(const std::string& what) : std::runtime_error(what) {}
};

/// Recover the face list of an embedded graph by tracing the orbits of the
/// rotation system. Throws FaceTracingError when some orbit is not a
/// triangle on three distinct vertices (the record is not a triangulation).
std::vector<Face> faces_from_rotation(const PlanarCodeGraph& g);

/// Rotation system of a sphere triangulation, computed by propagating a
/// consistent orientation over the faces. Each rotation starts at the
/// smallest neighbor. Only defined on the sphere.
PlanarCodeGraph rotation_from_triangulation(const Triangulation& t);

}  // namespace nullcolor
