#include <set>
#include <sstream>

#include "doctest.h"
#include "nullcolor/formats.hpp"
#include "nullcolor/generators.hpp"

using namespace nullcolor;

namespace {

std::string tri_text(const Triangulation& t) {
    std::ostringstream out;
    write_triangulation_text(out, t);
    return out.str();
}

Triangulation parse_tri(const std::string& text) {
    std::istringstream in(text);
    TriangulationText doc = read_triangulation_text(in);
    return validate_triangulation(doc.n, doc.faces);
}

std::string planar_bytes(const PlanarCodeFile& file) {
    std::ostringstream out;
    write_planar_code(out, file);
    return out.str();
}

PlanarCodeFile parse_planar(const std::string& bytes) {
    std::istringstream in(bytes);
    return read_planar_code(in);
}

}  // namespace

TEST_CASE("triangulation text round trip") {
    std::string text = tri_text(tetrahedron());
    CHECK(text == "vertices 4\nface 1 2 3\nface 1 2 4\nface 1 3 4\nface 2 3 4\n");
    CHECK(tri_text(parse_tri(text)) == text);

    std::istringstream commented("# K4\nvertices 4\n# the four faces\nface 1 2 3\nface 1 2 4\n"
                                 "face 1 3 4\nface 2 3 4\n");
    TriangulationText doc = read_triangulation_text(commented);
    CHECK(doc.n == 4);
    CHECK(doc.faces.size() == 4);
}

TEST_CASE("triangulation text parse errors") {
    std::istringstream missing("face 1 2 3\n");
    CHECK_THROWS_AS(read_triangulation_text(missing), ParseError);
    std::istringstream bad_face("vertices 4\nface 1 2\n");
    CHECK_THROWS_AS(read_triangulation_text(bad_face), ParseError);
    std::istringstream unknown("vertices 4\nedge 1 2\n");
    CHECK_THROWS_AS(read_triangulation_text(unknown), ParseError);
    std::istringstream degenerate("vertices 4\nface 1 1 2\n");
    CHECK_THROWS_AS(read_triangulation_text(degenerate), ParseError);
}

TEST_CASE("coloring text round trip and errors") {
    Triangulation t = tetrahedron();
    Coloring f = make_coloring(t, {1, 1, 2, 3});
    std::ostringstream out;
    write_coloring_text(out, f);
    CHECK(out.str() == "color 1 1\ncolor 2 1\ncolor 3 2\ncolor 4 3\n");
    std::istringstream in(out.str());
    std::vector<int> raw = read_coloring_text(in, 4);
    CHECK(make_coloring(t, raw).color == f.color);

    std::istringstream incomplete("color 1 1\ncolor 2 1\n");
    CHECK_THROWS_AS(read_coloring_text(incomplete, 4), ParseError);
    std::istringstream doubled("color 1 1\ncolor 1 2\ncolor 2 1\ncolor 3 1\ncolor 4 1\n");
    CHECK_THROWS_AS(read_coloring_text(doubled, 4), ParseError);
    std::istringstream out_of_range("color 9 1\n");
    CHECK_THROWS_AS(read_coloring_text(out_of_range, 4), ParseError);
}

TEST_CASE("report line format") {
    ReportLine line;
    line.id = "k4";
    line.n = 4;
    line.m = 6;
    line.f = 4;
    line.kind = SurfaceKind::Sphere;
    line.chi_f = 2;
    line.bound_value = 2;
    line.tight = true;
    line.witness = {1, 1, 1, 2};
    CHECK(line.to_tsv() == "k4\t4\t6\t4\tsphere\t2\t2\t1\t1,1,1,2");
}

TEST_CASE("planar_code parses a hand-built K4 stream") {
    // Header, then 4 vertices with rotations; a valid embedding of K4.
    std::string bytes = ">>planar_code<<";
    bytes += static_cast<char>(4);
    const int rotations[4][3] = {{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}};
    for (const auto& rot : rotations) {
        for (int w : rot) bytes += static_cast<char>(w);
        bytes += static_cast<char>(0);
    }
    PlanarCodeFile file = parse_planar(bytes);
    CHECK(file.header);
    REQUIRE(file.graphs.size() == 1);
    CHECK(file.graphs[0].n == 4);

    std::vector<Face> faces = faces_from_rotation(file.graphs[0]);
    Triangulation t = validate_triangulation(4, faces);
    CHECK(t.kind() == SurfaceKind::Sphere);
    std::set<Face> expected(tetrahedron().faces().begin(), tetrahedron().faces().end());
    CHECK(std::set<Face>(faces.begin(), faces.end()) == expected);

    CHECK(planar_bytes(file) == bytes);

    SUBCASE("the stream also parses without a header") {
        std::string headerless = bytes.substr(15);
        PlanarCodeFile file2 = parse_planar(headerless);
        CHECK(!file2.header);
        REQUIRE(file2.graphs.size() == 1);
        CHECK(planar_bytes(file2) == headerless);
    }
}

TEST_CASE("planar_code parse errors") {
    std::string truncated = ">>planar_code<<";
    truncated += static_cast<char>(4);
    truncated += static_cast<char>(2);
    CHECK_THROWS_AS(parse_planar(truncated), ParseError);

    std::string bad_neighbor;
    bad_neighbor += static_cast<char>(2);
    bad_neighbor += static_cast<char>(7);
    CHECK_THROWS_AS(parse_planar(bad_neighbor), ParseError);
}

TEST_CASE("face tracing rejects non-triangulations") {
    // A 4-cycle embedded in the plane: both faces are quadrilaterals.
    PlanarCodeGraph square;
    square.n = 4;
    square.rotation = {{}, {2, 4}, {3, 1}, {4, 2}, {1, 3}};
    CHECK_THROWS_AS(faces_from_rotation(square), FaceTracingError);

    PlanarCodeGraph repeated;
    repeated.n = 2;
    repeated.rotation = {{}, {2, 2}, {1, 1}};
    CHECK_THROWS_AS(faces_from_rotation(repeated), FaceTracingError);
}

TEST_CASE("rotation systems rebuilt from face lists round trip") {
    std::vector<Triangulation> catalog = {tetrahedron(), octahedron(), icosahedron(),
                                          bipyramid(5), stacked(9)};
    for (const Triangulation& t : catalog) {
        PlanarCodeGraph rotations = rotation_from_triangulation(t);
        std::vector<Face> recovered = faces_from_rotation(rotations);
        CHECK(std::set<Face>(recovered.begin(), recovered.end()) ==
              std::set<Face>(t.faces().begin(), t.faces().end()));

        PlanarCodeFile file;
        file.graphs.push_back(rotations);
        std::string bytes = planar_bytes(file);
        PlanarCodeFile reparsed = parse_planar(bytes);
        CHECK(planar_bytes(reparsed) == bytes);
    }
    CHECK_THROWS_AS(rotation_from_triangulation(projective_base()), std::invalid_argument);
}
