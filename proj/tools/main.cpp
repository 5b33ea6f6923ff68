#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nullcolor/formats.hpp"
#include "nullcolor/generators.hpp"
#include "nullcolor/homology.hpp"
#include "nullcolor/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;  // invalid input or bound violation
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

std::ifstream open_input(const std::string& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) throw nullcolor::ParseError("cannot open " + path);
    return in;
}

nullcolor::Triangulation load_triangulation(const std::string& path) {
    std::ifstream in = open_input(path);
    nullcolor::TriangulationText doc = nullcolor::read_triangulation_text(in);
    return nullcolor::validate_triangulation(doc.n, doc.faces);
}

int cmd_validate(const std::string& path) {
    nullcolor::Triangulation t = load_triangulation(path);
    std::cout << nullcolor::surface_name(t.kind()) << " n=" << t.vertex_count()
              << " m=" << t.edge_count() << " F=" << t.face_count() << "\n";
    return kExitOk;
}

int cmd_check(const std::string& tri_path, const std::string& coloring_path) {
    nullcolor::Triangulation t = load_triangulation(tri_path);
    std::ifstream in = open_input(coloring_path);
    nullcolor::Coloring f =
        nullcolor::make_coloring(t, nullcolor::read_coloring_text(in, t.vertex_count()));

    std::vector<nullcolor::Face> rainbow = nullcolor::rainbow_faces(t, f);
    bool null = nullcolor::is_null_coloring(t.skeleton(), f);
    nullcolor::MultiGraph quotient = nullcolor::quotient_graph(t.skeleton(), f);

    std::cout << "non_rainbow=" << (rainbow.empty() ? "true" : "false")
              << " null=" << (null ? "true" : "false")
              << " quotient_forest=" << (nullcolor::is_forest(quotient) ? "true" : "false") << "\n";
    for (const nullcolor::Face& face : rainbow)
        std::cout << "rainbow_face " << face.v[0] << " " << face.v[1] << " " << face.v[2] << "\n";
    for (const nullcolor::Edge& e : quotient.edges())
        std::cout << "quotient_edge " << e.u << " " << e.v << "\n";
    return kExitOk;
}

int cmd_chif(const std::string& path, long long max_nodes, bool defensive) {
    nullcolor::Triangulation t = load_triangulation(path);
    nullcolor::SearchBudget budget;
    budget.max_nodes = max_nodes;
    nullcolor::BoundReport report = defensive ? nullcolor::verify_bound(t, budget)
                                              : nullcolor::chi_f(t, budget);
    std::cout << nullcolor::make_report_line(path, t, report).to_tsv() << "\n";
    if (report.chi_f > report.bound_value) {
        std::cerr << "bound violation: chi_f=" << report.chi_f << " exceeds "
                  << report.bound_value << "\n";
        return kExitSemantic;
    }
    return kExitOk;
}

int cmd_generate(const std::string& surface, int n, bool extremal_mode, bool family_mode,
                 const std::string& out_path, long long max_nodes) {
    nullcolor::SurfaceKind kind;
    if (surface == "sphere")
        kind = nullcolor::SurfaceKind::Sphere;
    else if (surface == "projective")
        kind = nullcolor::SurfaceKind::ProjectivePlane;
    else
        throw CLI::ValidationError("--surface must be sphere or projective");
    if (extremal_mode == family_mode)
        throw CLI::ValidationError("choose exactly one of --extremal / --family");

    if (family_mode) {
        nullcolor::Triangulation t = kind == nullcolor::SurfaceKind::Sphere
                                         ? nullcolor::stacked(n)
                                         : nullcolor::projective_family(n);
        std::ofstream out(out_path);
        nullcolor::write_triangulation_text(out, t);
        std::cout << "wrote " << out_path << " (" << nullcolor::surface_name(t.kind())
                  << " n=" << t.vertex_count() << " F=" << t.face_count() << ")\n";
        return kExitOk;
    }

    nullcolor::SearchBudget budget;
    budget.max_nodes = max_nodes;
    nullcolor::ExtremalWitness w = nullcolor::extremal(n, kind, budget);
    std::ofstream out(out_path);
    nullcolor::write_triangulation_text(out, w.triangulation);
    const std::string coloring_path = out_path + ".coloring";
    std::ofstream cout_file(coloring_path);
    nullcolor::write_coloring_text(cout_file, w.coloring);
    std::cout << "wrote " << out_path << " and " << coloring_path << " ("
              << nullcolor::surface_name(w.triangulation.kind()) << " n="
              << w.triangulation.vertex_count() << " colors=" << w.colors
              << " bound=" << nullcolor::bound(n, kind)
              << (w.constructive ? "" : " via search") << ")\n";
    return kExitOk;
}

// Records that are not sphere triangulations are skipped with a diagnostic;
// a bound violation anywhere turns the exit status nonzero.
int cmd_batch(const std::string& path, long long max_nodes) {
    std::ifstream in = open_input(path, std::ios::in | std::ios::binary);
    nullcolor::PlanarCodeFile file = nullcolor::read_planar_code(in);
    nullcolor::SearchBudget budget;
    budget.max_nodes = max_nodes;

    bool violation = false;
    int index = 0;
    for (const nullcolor::PlanarCodeGraph& record : file.graphs) {
        ++index;
        std::vector<nullcolor::Face> faces;
        try {
            faces = nullcolor::faces_from_rotation(record);
        } catch (const nullcolor::FaceTracingError& e) {
            std::cerr << "skip record " << index << ": " << e.what() << "\n";
            continue;
        }
        nullcolor::Triangulation t = [&]() {
            try {
                return nullcolor::validate_triangulation(record.n, faces);
            } catch (const nullcolor::ValidationError& e) {
                throw nullcolor::FaceTracingError(e.what());
            }
        }();
        nullcolor::BoundReport report = nullcolor::verify_bound(t, budget);
        std::cout << nullcolor::make_report_line(std::to_string(index), t, report).to_tsv()
                  << "\n";
        if (report.chi_f > report.bound_value) {
            violation = true;
            std::cerr << "bound violation on record " << index << "\n";
        }
    }
    return violation ? kExitSemantic : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow-free colorings of sphere and projective-plane triangulations"};
    app.require_subcommand(1);
    long long max_nodes = nullcolor::SearchBudget{}.max_nodes;

    std::string tri_path, coloring_path, out_path, surface;
    int n = 0;
    bool defensive = false, extremal_mode = false, family_mode = false;

    CLI::App* validate = app.add_subcommand("validate", "check a triangulation file");
    validate->add_option("path", tri_path, "triangulation file")->required();

    CLI::App* check = app.add_subcommand("check", "evaluate a coloring of a triangulation");
    check->add_option("triangulation", tri_path)->required();
    check->add_option("coloring", coloring_path)->required();

    CLI::App* chif = app.add_subcommand("chif", "compute the maximum rainbow-free color count");
    chif->add_option("path", tri_path)->required();
    chif->add_option("--budget", max_nodes, "search node limit");
    chif->add_flag("--defensive", defensive, "descend from k = n instead of the bound");

    CLI::App* generate = app.add_subcommand("generate", "write family members or sharp witnesses");
    generate->add_option("--surface", surface, "sphere or projective")->required();
    generate->add_option("--n", n, "vertex count")->required();
    generate->add_flag("--extremal", extremal_mode, "triangulation plus matching coloring");
    generate->add_flag("--family", family_mode, "triangulation only");
    generate->add_option("--budget", max_nodes, "search node limit");
    generate->add_option("out", out_path, "output path")->required();

    CLI::App* batch = app.add_subcommand("batch", "verify the bound over a planar_code stream");
    batch->add_option("path", tri_path)->required();
    batch->add_option("--budget", max_nodes, "search node limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (validate->parsed()) return cmd_validate(tri_path);
        if (check->parsed()) return cmd_check(tri_path, coloring_path);
        if (chif->parsed()) return cmd_chif(tri_path, max_nodes, defensive);
        if (generate->parsed())
            return cmd_generate(surface, n, extremal_mode, family_mode, out_path, max_nodes);
        if (batch->parsed()) return cmd_batch(tri_path, max_nodes);
    } catch (const nullcolor::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nullcolor::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const nullcolor::ValidationError& e) {
        std::cerr << "invalid triangulation: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitOk;
}
