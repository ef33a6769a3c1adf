// qlat: exact A_3/A_4 lattice toolkit and decagonal quasicrystal generator.
//
// Commands: cartan, orbit, project, strip, slab, figure <preset>, verify.
// Global flags: --out <path>, --config <path>, --threads N, --max-box N.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "CLI11.hpp"
#include "qlat/figures.hpp"
#include "qlat/verify.hpp"

using namespace qlat;

namespace {

struct GlobalOpts {
    std::string out;
    std::string config;
    int threads = 1;
    long long max_box = 20'000'000;
    SvgStyle style;
};

void load_config(GlobalOpts& g) {
    if (g.config.empty()) return;
    std::ifstream in(g.config);
    if (!in) throw CLI::ValidationError("--config", "cannot open config file: " + g.config);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "expected key=value at line " +
                                                       std::to_string(lineno));
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "point_radius") g.style.point_radius = std::stod(value);
        else if (key == "fill") g.style.fill = value;
        else if (key == "width_px") g.style.width_px = std::stoi(value);
        else if (key == "max_box") g.max_box = std::stoll(value);
        else if (key == "threads") g.threads = std::stoi(value);
        else
            throw CLI::ValidationError("--config", "unknown key '" + key + "' at line " +
                                                       std::to_string(lineno));
    }
}

std::ostream& open_out(const GlobalOpts& g, std::ofstream& file) {
    if (g.out.empty()) return std::cout;
    file.open(g.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + g.out);
    return file;
}

EmitFormat parse_format(const std::string& f) {
    if (f == "csv") return EmitFormat::csv;
    if (f == "json") return EmitFormat::json;
    if (f == "svg") return EmitFormat::svg;
    throw CLI::ValidationError("--format", "unknown format: " + f);
}

std::vector<long> parse_coords(const std::string& text, int rank) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
    if (static_cast<int>(out.size()) != rank)
        throw CLI::ValidationError("--weight", "expected " + std::to_string(rank) +
                                                   " comma-separated integers");
    return out;
}

Golden parse_golden_pair(const std::string& text, const std::string& flag) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError(flag, "expected a,b meaning a+b*tau");
    return {Rational(text.substr(0, comma)), Rational(text.substr(comma + 1))};
}

Diagram parse_diagram(const std::string& name) {
    if (name == "A3") return kA3;
    if (name == "A4") return kA4;
    throw CLI::ValidationError("--diagram", "expected A3 or A4");
}

nlohmann::json matrix_json(const MatG& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_points(const PointSet2D& ps, const GlobalOpts& g, const std::string& format) {
    EmitFormat fmt = parse_format(format);
    if (!g.out.empty()) {
        emit(ps, fmt, g.out, g.style);
        return;
    }
    switch (fmt) {
        case EmitFormat::csv: emit_csv(ps, std::cout); break;
        case EmitFormat::json: emit_json(ps, std::cout); break;
        case EmitFormat::svg: emit_svg(ps, std::cout, g.style); break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact A_3/A_4 Coxeter lattice toolkit and decagonal quasicrystal generator"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--out", g.out, "Write output to this path instead of stdout");
    app.add_option("--config", g.config, "key=value config file (SVG style, caps)");
    app.add_option("--threads", g.threads, "Worker threads for lattice enumeration");
    app.add_option("--max-box", g.max_box, "Enumeration box volume cap");

    // cartan
    std::string family = "A";
    int rank = 4;
    bool with_inverse = false;
    CLI::App* cartan = app.add_subcommand("cartan", "Print the exact Cartan matrix as JSON");
    cartan->add_option("--family", family, "Diagram family (A)");
    cartan->add_option("--rank", rank, "Rank n (1..5)")->required();
    cartan->add_flag("--inverse", with_inverse, "Include the exact inverse");

    // orbit
    std::string orb_diagram = "A4", orb_weight, orb_basis = "weight", orb_format = "json";
    bool symbolic = false;
    CLI::App* orb = app.add_subcommand("orbit", "Weyl orbit of a dominant weight");
    orb->add_option("--diagram", orb_diagram, "A3 or A4");
    orb->add_option("--weight", orb_weight, "Comma-separated dominant weight coordinates");
    orb->add_option("--basis", orb_basis, "Output basis: weight or root");
    orb->add_option("--format", orb_format, "json or csv");
    orb->add_flag("--symbolic", symbolic, "Print the 120 symbolic A_4 orbit forms");

    // project
    std::string prj_diagram = "A4", prj_basis = "weight", prj_in, prj_plane = "par",
                prj_format = "csv";
    CLI::App* prj = app.add_subcommand("project", "Project lattice vectors onto E_par or E_perp");
    prj->add_option("--diagram", prj_diagram, "A4 (projection plane is A_4-specific)");
    prj->add_option("--basis", prj_basis, "Basis of the input coordinates: weight or root");
    prj->add_option("--in", prj_in, "JSON file: array of integer coordinate arrays")->required();
    prj->add_option("--plane", prj_plane, "par or perp");
    prj->add_option("--format", prj_format, "csv or json");

    // strip
    std::string strip_lattice = "root", strip_window = "root-voronoi", strip_par = "2,0",
                strip_offset, strip_format = "csv";
    CLI::App* strip = app.add_subcommand("strip", "Cut-and-project quasicrystal point set");
    strip->add_option("--lattice", strip_lattice, "root or weight");
    strip->add_option("--window", strip_window,
                      "root-voronoi | weight-voronoi | custom:<a>,<b> (squared radius a+b*tau)");
    strip->add_option("--par-r2", strip_par, "Parallel squared radius as a,b meaning a+b*tau");
    strip->add_option("--offset", strip_offset,
                      "Comma-separated integer weight-basis offset applied before projection");
    strip->add_option("--format", strip_format, "csv, json or svg");

    // slab
    int amax = 2, smax = 2;
    std::string slab_format = "csv";
    CLI::App* slab = app.add_subcommand("slab", "Decorative slab distribution |a_i|<=amax");
    slab->add_option("--amax", amax, "Coordinate bound")->required();
    slab->add_option("--smax", smax, "Bound on |a_1+a_2+a_3+a_4|")->required();
    slab->add_option("--format", slab_format, "csv, json or svg");

    // figure
    std::string preset;
    CLI::App* fig = app.add_subcommand("figure", "Write <preset>.csv and <preset>.svg");
    fig->add_option("preset", preset, "fig7a..fig17b")->required();

    // verify
    std::string suite = "all";
    CLI::App* ver = app.add_subcommand("verify", "Run the invariant check registry");
    ver->add_option("--suite", suite,
                    "golden|quaternion|coxeter|group|projection|quasilattice|all");

    CLI11_PARSE(app, argc, argv);

    try {
        load_config(g);

        if (*cartan) {
            if (family != "A") throw CLI::ValidationError("--family", "only family A is defined");
            CartanPair c = cartan_matrix(Diagram::A(rank));
            nlohmann::json j;
            j["family"] = family;
            j["rank"] = rank;
            j["cartan"] = matrix_json(c.matrix);
            if (with_inverse) j["inverse"] = matrix_json(c.inverse);
            std::ofstream file;
            open_out(g, file) << j.dump(2) << "\n";
        } else if (*orb) {
            std::ofstream file;
            std::ostream& os = open_out(g, file);
            if (symbolic) {
                for (const Eigen::Matrix4i& m : symbolic_orbit()) {
                    // each row: the linear form sum_j m(i,j) a_{j+1}
                    nlohmann::json rows = nlohmann::json::array();
                    for (int i = 0; i < 4; ++i) {
                        nlohmann::json row = nlohmann::json::array();
                        for (int j = 0; j < 4; ++j) row.push_back(m(i, j));
                        rows.push_back(std::move(row));
                    }
                    os << rows.dump() << "\n";
                }
            } else {
                if (orb_weight.empty())
                    throw CLI::ValidationError("--weight", "required unless --symbolic");
                Diagram d = parse_diagram(orb_diagram);
                Basis basis = orb_basis == "root" ? Basis::root : Basis::weight;
                std::vector<LatticeVector> pts =
                    orbit(weight_vector(d, parse_coords(orb_weight, d.rank)));
                if (orb_format == "csv") {
                    for (const LatticeVector& v : pts) {
                        LatticeVector w = convert_basis(v, basis);
                        for (int i = 0; i < w.coords.rows(); ++i)
                            os << (i ? "," : "") << w.coords(i).str();
                        os << "\n";
                    }
                } else {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const LatticeVector& v : pts) {
                        LatticeVector w = convert_basis(v, basis);
                        nlohmann::json row = nlohmann::json::array();
                        for (int i = 0; i < w.coords.rows(); ++i) row.push_back(w.coords(i));
                        arr.push_back(std::move(row));
                    }
                    os << arr.dump(2) << "\n";
                }
            }
        } else if (*prj) {
            Diagram d = parse_diagram(prj_diagram);
            Basis basis = prj_basis == "root" ? Basis::root : Basis::weight;
            std::ifstream in(prj_in);
            if (!in) throw std::runtime_error("cannot open input: " + prj_in);
            nlohmann::json jin = nlohmann::json::parse(in);
            PointSet2D ps;
            ps.metadata.command = "project";
            ps.metadata.lattice = prj_diagram;
            for (const nlohmann::json& row : jin) {
                VecG v(d.rank);
                for (int i = 0; i < d.rank; ++i) v(i) = Golden(row.at(i).get<long long>());
                LatticeVector lv{d, basis, std::move(v)};
                if (prj_plane == "perp") {
                    PerpPoint q = project_perp(lv);
                    ps.points.push_back(PlanarPoint{q.Z, q.W, q.fz, q.fw});
                } else {
                    ps.points.push_back(project_parallel(lv));
                }
            }
            ps.metadata.candidates = ps.metadata.accepted =
                static_cast<long long>(ps.points.size());
            emit_points(ps, g, prj_format);
        } else if (*strip) {
            StripConfig cfg;
            cfg.lattice =
                strip_lattice == "weight" ? StripLattice::A4_weight : StripLattice::A4_root;
            if (strip_lattice != "root" && strip_lattice != "weight")
                throw CLI::ValidationError("--lattice", "expected root or weight");
            if (strip_window == "root-voronoi")
                cfg.window = window_from_voronoi(StripLattice::A4_root);
            else if (strip_window == "weight-voronoi")
                cfg.window = window_from_voronoi(StripLattice::A4_weight);
            else if (strip_window.rfind("custom:", 0) == 0)
                cfg.window = custom_window(parse_golden_pair(strip_window.substr(7), "--window"));
            else
                throw CLI::ValidationError("--window", "unknown window: " + strip_window);
            cfg.par_squared_radius = parse_golden_pair(strip_par, "--par-r2");
            if (!strip_offset.empty())
                cfg.offset = weight_vector(kA4, parse_coords(strip_offset, 4));
            cfg.threads = g.threads;
            cfg.max_box = g.max_box;
            StripResult res = strip_project(cfg);
            res.points.metadata.command = "strip";
            emit_points(res.points, g, strip_format);
        } else if (*slab) {
            PointSet2D ps = slab_project(amax, smax);
            ps.metadata.command = "slab";
            emit_points(ps, g, slab_format);
        } else if (*fig) {
            std::string out_dir = g.out.empty() ? "." : g.out;
            std::filesystem::create_directories(out_dir);
            for (const std::string& path :
                 run_figure(preset, out_dir, g.style, g.threads, g.max_box))
                std::cout << path << "\n";
        } else if (*ver) {
            if (!valid_suite(suite))
                throw CLI::ValidationError("--suite", "unknown suite: " + suite);
            std::ofstream file;
            bool ok = run_verify(suite, open_out(g, file));
            return ok ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
