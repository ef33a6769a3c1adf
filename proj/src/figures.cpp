#include "qlat/figures.hpp"

#include <stdexcept>

namespace qlat {

namespace {

PointSet2D project_orbit(std::vector<long> w) {
    PointSet2D out;
    std::string label = "orbit(";
    for (size_t i = 0; i < w.size(); ++i) label += (i ? "," : "") + std::to_string(w[i]);
    label += ")";
    for (const LatticeVector& v : orbit(weight_vector(kA4, std::move(w))))
        out.points.push_back(project_parallel(v));
    out.metadata.lattice = "A4_weight";
    out.metadata.window = label;
    out.metadata.candidates = out.metadata.accepted = static_cast<long long>(out.points.size());
    out.sort_points();
    return out;
}

PointSet2D project_voronoi(VoronoiLattice lattice, const std::string& label) {
    PointSet2D out;
    for (const LatticeVector& v : voronoi_vertices(lattice))
        out.points.push_back(project_parallel(v));
    out.metadata.lattice = label;
    out.metadata.window = "voronoi-vertices";
    out.metadata.candidates = out.metadata.accepted = static_cast<long long>(out.points.size());
    out.sort_points();
    return out;
}

PointSet2D run_strip(StripLattice lattice, int tau_power, int threads, long long max_box) {
    StripConfig cfg;
    cfg.lattice = lattice;
    cfg.window = window_from_voronoi(lattice);
    cfg.par_squared_radius =
        Golden(Rational(2, 5)) * pow(Golden::tau(), tau_power);
    cfg.threads = threads;
    cfg.max_box = max_box;
    return strip_project(cfg).points;
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
    static const std::vector<FigurePreset> presets = {
        {"fig7a", "orbit --diagram A4 --weight 1,0,0,0 projected onto the Coxeter plane"},
        {"fig7b", "orbit --diagram A4 --weight 0,0,0,1 projected onto the Coxeter plane"},
        {"fig8a", "orbit --diagram A4 --weight 0,0,1,0 projected onto the Coxeter plane"},
        {"fig8b", "orbit --diagram A4 --weight 0,1,0,0 projected onto the Coxeter plane"},
        {"fig10", "orbit --diagram A4 --weight 1,0,0,1 (root system) projected"},
        {"fig11", "Voronoi(A4 root) vertex union projected (nested decagrams)"},
        {"fig12", "Voronoi(A4 weight) vertices, the orbit of (1,1,1,1), projected"},
        {"fig13", "orbit --diagram A4 --weight 0,1,1,0 projected onto the Coxeter plane"},
        {"fig15", "strip --lattice root --window root-voronoi --par-r2 (2/5)tau^8"},
        {"fig16", "strip --lattice weight --window weight-voronoi --par-r2 (2/5)tau^6"},
        {"fig17a", "slab --amax 2 --smax 2"},
        {"fig17b", "slab --amax 3 --smax 3"},
    };
    return presets;
}

PointSet2D run_figure_points(const std::string& name, int threads, long long max_box) {
    PointSet2D ps;
    if (name == "fig7a") ps = project_orbit({1, 0, 0, 0});
    else if (name == "fig7b") ps = project_orbit({0, 0, 0, 1});
    else if (name == "fig8a") ps = project_orbit({0, 0, 1, 0});
    else if (name == "fig8b") ps = project_orbit({0, 1, 0, 0});
    else if (name == "fig10") ps = project_orbit({1, 0, 0, 1});
    else if (name == "fig11") ps = project_voronoi(VoronoiLattice::A4_root, "A4_root");
    else if (name == "fig12") ps = project_voronoi(VoronoiLattice::A4_weight, "A4_weight");
    else if (name == "fig13") ps = project_orbit({0, 1, 1, 0});
    else if (name == "fig15") ps = run_strip(StripLattice::A4_root, 8, threads, max_box);
    else if (name == "fig16") ps = run_strip(StripLattice::A4_weight, 6, threads, max_box);
    else if (name == "fig17a") ps = slab_project(2, 2);
    else if (name == "fig17b") ps = slab_project(3, 3);
    else throw std::invalid_argument("unknown figure preset: " + name);
    ps.metadata.command = "figure " + name;
    return ps;
}

std::vector<std::string> run_figure(const std::string& name, const std::string& out_dir,
                                    const SvgStyle& style, int threads, long long max_box) {
    PointSet2D ps = run_figure_points(name, threads, max_box);
    std::string csv = out_dir + "/" + name + ".csv";
    std::string svg = out_dir + "/" + name + ".svg";
    emit(ps, EmitFormat::csv, csv, style);
    emit(ps, EmitFormat::svg, svg, style);
    return {csv, svg};
}

}  // namespace qlat
