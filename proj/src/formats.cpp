#include "nullcolor/formats.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

namespace nullcolor {

namespace {

// Strip comments and blank lines; yield meaningful lines one at a time.
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

TriangulationText read_triangulation_text(std::istream& in) {
    TriangulationText doc;
    bool have_n = false;
    for (const std::string& line : content_lines(in)) {
        std::istringstream row(line);
        std::string keyword;
        row >> keyword;
        if (keyword == "vertices") {
            if (have_n) throw ParseError("repeated vertices line");
            if (!(row >> doc.n) || doc.n < 1) throw ParseError("bad vertices line: " + line);
            have_n = true;
        } else if (keyword == "face") {
            int a, b, c;
            if (!(row >> a >> b >> c)) throw ParseError("bad face line: " + line);
            std::string extra;
            if (row >> extra) throw ParseError("trailing tokens on face line: " + line);
            if (a == b || b == c || a == c) throw ParseError("face needs three distinct vertices: " + line);
            doc.faces.push_back(make_face(a, b, c));
        } else {
            throw ParseError("unknown keyword '" + keyword + "'");
        }
    }
    if (!have_n) throw ParseError("missing vertices line");
    return doc;
}

void write_triangulation_text(std::ostream& out, const Triangulation& t) {
    out << "vertices " << t.vertex_count() << "\n";
    for (const Face& f : t.faces()) out << "face " << f.v[0] << " " << f.v[1] << " " << f.v[2] << "\n";
}

std::vector<int> read_coloring_text(std::istream& in, int n) {
    std::vector<int> raw(static_cast<size_t>(n), 0);
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (const std::string& line : content_lines(in)) {
        std::istringstream row(line);
        std::string keyword;
        int v, c;
        row >> keyword;
        if (keyword != "color" || !(row >> v >> c)) throw ParseError("bad color line: " + line);
        if (v < 1 || v > n) throw ParseError("vertex out of range on line: " + line);
        if (seen[static_cast<size_t>(v)]) throw ParseError("vertex colored twice: " + line);
        seen[static_cast<size_t>(v)] = true;
        raw[static_cast<size_t>(v) - 1] = c;
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw ParseError("vertex " + std::to_string(v) + " has no color");
    return raw;
}

void write_coloring_text(std::ostream& out, const Coloring& f) {
    for (int v = 1; v <= f.n(); ++v) out << "color " << v << " " << f.of(v) << "\n";
}

std::string ReportLine::to_tsv() const {
    std::ostringstream out;
    out << id << "\t" << n << "\t" << m << "\t" << f << "\t" << surface_name(kind) << "\t"
        << chi_f << "\t" << bound_value << "\t" << (tight ? 1 : 0) << "\t";
    for (size_t i = 0; i < witness.size(); ++i) {
        if (i) out << ",";
        out << witness[i];
    }
    return out.str();
}

ReportLine make_report_line(std::string id, const Triangulation& t, const BoundReport& report) {
    ReportLine line;
    line.id = std::move(id);
    line.n = t.vertex_count();
    line.m = t.edge_count();
    line.f = t.face_count();
    line.kind = t.kind();
    line.chi_f = report.chi_f;
    line.bound_value = report.bound_value;
    line.tight = report.tight;
    line.witness.assign(report.witness.color.begin() + 1, report.witness.color.end());
    return line;
}

namespace {

constexpr char kPlanarCodeHeader[] = ">>planar_code<<";
constexpr size_t kHeaderLength = 15;

}  // namespace

PlanarCodeFile read_planar_code(std::istream& in) {
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    PlanarCodeFile file;
    size_t pos = 0;
    file.header = bytes.compare(0, kHeaderLength, kPlanarCodeHeader) == 0;
    if (file.header) pos = kHeaderLength;

    while (pos < bytes.size()) {
        PlanarCodeGraph g;
        g.n = static_cast<unsigned char>(bytes[pos++]);
        if (g.n == 0) throw ParseError("planar_code record with zero vertices");
        g.rotation.assign(static_cast<size_t>(g.n) + 1, {});
        for (int v = 1; v <= g.n; ++v) {
            while (true) {
                if (pos >= bytes.size())
                    throw ParseError("truncated planar_code record for vertex " + std::to_string(v));
                int w = static_cast<unsigned char>(bytes[pos++]);
                if (w == 0) break;
                if (w > g.n)
                    throw ParseError("planar_code neighbor " + std::to_string(w) +
                                     " out of range 1.." + std::to_string(g.n));
                g.rotation[static_cast<size_t>(v)].push_back(w);
            }
        }
        file.graphs.push_back(std::move(g));
    }
    return file;
}

void write_planar_code(std::ostream& out, const PlanarCodeFile& file) {
    if (file.header) out.write(kPlanarCodeHeader, static_cast<std::streamsize>(kHeaderLength));
    for (const PlanarCodeGraph& g : file.graphs) {
        out.put(static_cast<char>(static_cast<unsigned char>(g.n)));
        for (int v = 1; v <= g.n; ++v) {
            for (int w : g.rotation[static_cast<size_t>(v)])
                out.put(static_cast<char>(static_cast<unsigned char>(w)));
            out.put(0);
        }
    }
}

std::vector<Face> faces_from_rotation(const PlanarCodeGraph& g) {
    // Position of each neighbor within each rotation; demands simple adjacency.
    std::vector<std::map<int, int>> position(static_cast<size_t>(g.n) + 1);
    for (int v = 1; v <= g.n; ++v) {
        const auto& rot = g.rotation[static_cast<size_t>(v)];
        for (size_t i = 0; i < rot.size(); ++i) {
            if (rot[i] == v) throw FaceTracingError("loop in rotation system");
            if (!position[static_cast<size_t>(v)].emplace(rot[i], static_cast<int>(i)).second)
                throw FaceTracingError("repeated neighbor in rotation of vertex " + std::to_string(v));
        }
    }
    for (int v = 1; v <= g.n; ++v)
        for (int w : g.rotation[static_cast<size_t>(v)])
            if (!position[static_cast<size_t>(w)].count(v))
                throw FaceTracingError("rotation system is not symmetric");

    // Trace face orbits: after arriving at v from u, leave along the
    // successor of u in the rotation at v.
    std::vector<Face> faces;
    std::map<std::pair<int, int>, bool> used;
    for (int v = 1; v <= g.n; ++v)
        for (int w : g.rotation[static_cast<size_t>(v)]) used[{v, w}] = false;
    for (auto& [arc, done] : used) {
        if (done) continue;
        std::vector<int> orbit;
        int u = arc.first, v = arc.second;
        while (!used.at({u, v})) {
            used.at({u, v}) = true;
            orbit.push_back(u);
            const auto& rot = g.rotation[static_cast<size_t>(v)];
            int i = position[static_cast<size_t>(v)].at(u);
            int w = rot[(static_cast<size_t>(i) + 1) % rot.size()];
            u = v;
            v = w;
        }
        if (orbit.size() != 3)
            throw FaceTracingError("face of length " + std::to_string(orbit.size()) +
                                   "; not a triangulation");
        faces.push_back(make_face(orbit[0], orbit[1], orbit[2]));
    }
    return faces;
}

PlanarCodeGraph rotation_from_triangulation(const Triangulation& t) {
    if (t.kind() != SurfaceKind::Sphere)
        throw std::invalid_argument("planar_code output is defined on the sphere only");

    // Orient all faces consistently: each edge must be traversed once in
    // each direction. The sphere is orientable, so propagation succeeds.
    const auto& faces = t.faces();
    std::vector<std::array<int, 3>> oriented(faces.size());
    std::vector<bool> fixed(faces.size(), false);
    std::map<std::pair<int, int>, std::vector<int>> faces_of_edge;
    for (size_t i = 0; i < faces.size(); ++i) {
        const Face& f = faces[i];
        faces_of_edge[{f.v[0], f.v[1]}].push_back(static_cast<int>(i));
        faces_of_edge[{f.v[0], f.v[2]}].push_back(static_cast<int>(i));
        faces_of_edge[{f.v[1], f.v[2]}].push_back(static_cast<int>(i));
    }
    auto directed = [&](const std::array<int, 3>& tri, int a, int b) {
        // true iff the boundary cycle tri traverses a -> b
        for (int i = 0; i < 3; ++i)
            if (tri[static_cast<size_t>(i)] == a && tri[(static_cast<size_t>(i) + 1) % 3] == b) return true;
        return false;
    };
    std::queue<int> queue;
    oriented[0] = {faces[0].v[0], faces[0].v[1], faces[0].v[2]};
    fixed[0] = true;
    queue.push(0);
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop();
        const Face& f = faces[static_cast<size_t>(i)];
        const std::array<std::pair<int, int>, 3> edges = {
            std::pair{f.v[0], f.v[1]}, {f.v[0], f.v[2]}, {f.v[1], f.v[2]}};
        for (const auto& [a, b] : edges) {
            for (int j : faces_of_edge.at({a, b})) {
                if (j == i || fixed[static_cast<size_t>(j)]) continue;
                const Face& g = faces[static_cast<size_t>(j)];
                int c = g.v[0] + g.v[1] + g.v[2] - a - b;  // third vertex
                // Neighbor must traverse the shared edge in the opposite direction.
                bool i_forward = directed(oriented[static_cast<size_t>(i)], a, b);
                oriented[static_cast<size_t>(j)] =
                    i_forward ? std::array<int, 3>{b, a, c} : std::array<int, 3>{a, b, c};
                fixed[static_cast<size_t>(j)] = true;
                queue.push(j);
            }
        }
    }

    // At each corner (v; a, b) of an oriented face v -> a -> b, the edge to b
    // follows the edge to a in the rotation at v... the successor map below
    // matches the tracing rule in faces_from_rotation.
    PlanarCodeGraph out;
    out.n = t.vertex_count();
    out.rotation.assign(static_cast<size_t>(out.n) + 1, {});
    std::vector<std::map<int, int>> successor(static_cast<size_t>(out.n) + 1);
    for (const auto& tri : oriented) {
        for (int i = 0; i < 3; ++i) {
            int v = tri[static_cast<size_t>(i)];
            int a = tri[(static_cast<size_t>(i) + 1) % 3];
            int b = tri[(static_cast<size_t>(i) + 2) % 3];
            // Face v -> a -> b: leaving v toward a returns via b; the tracing
            // rule "successor of incoming" closes the triangle when the
            // successor of b at v is a.
            successor[static_cast<size_t>(v)][b] = a;
        }
    }
    for (int v = 1; v <= out.n; ++v) {
        const auto& succ = successor[static_cast<size_t>(v)];
        if (succ.empty()) throw std::logic_error("vertex without corners");
        int start = succ.begin()->first;
        int w = start;
        do {
            out.rotation[static_cast<size_t>(v)].push_back(w);
            w = succ.at(w);
        } while (w != start);
    }
    return out;
}

}  // namespace nullcolor
