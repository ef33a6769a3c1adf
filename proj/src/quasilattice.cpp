#include "qlat/quasilattice.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qlat {

namespace {

Basis lattice_basis(StripLattice lattice) {
    return lattice == StripLattice::A4_root ? Basis::root : Basis::weight;
}

std::string planar_key(const PlanarPoint& p) {
    std::ostringstream os;
    os << p.X << "|" << p.Y;
    return os.str();
}

}  // namespace

Window window_from_voronoi(StripLattice lattice) {
    std::vector<LatticeVector> verts = voronoi_vertices(
        lattice == StripLattice::A4_root ? VoronoiLattice::A4_root : VoronoiLattice::A4_weight);
    Golden best = 0;
    for (const LatticeVector& v : verts) {
        Golden n2 = project_perp(v).squared_norm();
        if ((n2 - best).sign() > 0) best = n2;
    }
    return Window{best, lattice == StripLattice::A4_root ? WindowSource::root_voronoi
                                                         : WindowSource::weight_voronoi};
}

Window custom_window(Golden squared_radius) {
    if (squared_radius.sign() <= 0)
        throw std::invalid_argument("custom_window: squared radius must be positive (empty window)");
    return Window{std::move(squared_radius), WindowSource::custom};
}

StripResult strip_project(const StripConfig& config) {
    if (config.window.squared_radius.sign() <= 0)
        throw std::invalid_argument("strip_project: window radius must be positive");
    if (config.par_squared_radius.sign() <= 0)
        throw std::invalid_argument("strip_project: parallel radius must be positive");

    const Basis basis = lattice_basis(config.lattice);
    CartanPair c = cartan_matrix(kA4);
    // Dual Gram diagonal: root lattice points bound by C^-1, weight by C.
    const MatG& dual_gram = basis == Basis::root ? c.inverse : c.matrix;

    VecG offset = VecG::Zero(4);
    if (config.offset) offset = convert_basis(*config.offset, basis).coords;

    // Pythagoras: |v+o|^2 = par^2 + perp^2 <= R^2, so each coordinate of v+o
    // is bounded by sqrt((G^-1)_ii R^2); round outward.
    const double r2 =
        (config.par_squared_radius + config.window.squared_radius).to_double() * (1 + 1e-12);
    long long lo[4], hi[4];
    long long volume = 1;
    for (int i = 0; i < 4; ++i) {
        double bound = std::sqrt(dual_gram(i, i).to_double() * r2);
        double oi = offset(i).to_double();
        lo[i] = static_cast<long long>(std::floor(-bound - oi));
        hi[i] = static_cast<long long>(std::ceil(bound - oi));
        volume *= hi[i] - lo[i] + 1;
        if (volume > config.max_box)
            throw std::runtime_error("strip_project: enumeration box exceeds --max-box cap");
    }

    struct Hit {
        LatticeVector v;
        PlanarPoint p;
    };
    const int threads = std::max(1, config.threads);
    std::vector<std::vector<Hit>> partial(threads);

    auto scan = [&](int tid) {
        std::vector<Hit>& hits = partial[tid];
        for (long long i0 = lo[0] + tid; i0 <= hi[0]; i0 += threads) {
            for (long long i1 = lo[1]; i1 <= hi[1]; ++i1)
                for (long long i2 = lo[2]; i2 <= hi[2]; ++i2)
                    for (long long i3 = lo[3]; i3 <= hi[3]; ++i3) {
                        VecG v(4);
                        v << Golden(i0) + offset(0), Golden(i1) + offset(1),
                            Golden(i2) + offset(2), Golden(i3) + offset(3);
                        LatticeVector shifted{kA4, basis, std::move(v)};
                        if ((project_perp(shifted).squared_norm() - config.window.squared_radius)
                                .sign() > 0)
                            continue;
                        PlanarPoint p = project_parallel(shifted);
                        if ((p.squared_norm() - config.par_squared_radius).sign() > 0) continue;
                        hits.push_back(Hit{std::move(shifted), std::move(p)});
                    }
        }
    };
    if (threads == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(scan, t);
        for (auto& th : pool) th.join();
    }

    StripResult result;
    std::map<std::string, int> seen;
    for (auto& part : partial) {
        for (Hit& h : part) {
            if (++seen[planar_key(h.p)] == 1) result.points.points.push_back(h.p);
            else ++result.points.metadata.collisions;
            result.accepted.push_back(std::move(h.v));
        }
    }
    result.points.metadata.candidates = volume;
    result.points.metadata.accepted = static_cast<long long>(result.accepted.size());
    result.points.metadata.lattice =
        config.lattice == StripLattice::A4_root ? "A4_root" : "A4_weight";
    switch (config.window.source) {
        case WindowSource::root_voronoi: result.points.metadata.window = "root-voronoi"; break;
        case WindowSource::weight_voronoi: result.points.metadata.window = "weight-voronoi"; break;
        case WindowSource::custom:
            result.points.metadata.window = "custom:" + config.window.squared_radius.str();
            break;
    }
    result.points.sort_points();
    return result;
}

PointSet2D slab_project(int amax, int smax) {
    if (amax < 0 || smax < 0) throw std::invalid_argument("slab_project: negative bound");
    PointSet2D out;
    std::map<std::string, int> seen;
    long long candidates = 0;
    for (long a1 = -amax; a1 <= amax; ++a1)
        for (long a2 = -amax; a2 <= amax; ++a2)
            for (long a3 = -amax; a3 <= amax; ++a3)
                for (long a4 = -amax; a4 <= amax; ++a4) {
                    ++candidates;
                    if (std::llabs(a1 + a2 + a3 + a4) > smax) continue;
                    PlanarPoint p = project_parallel(weight_vector(kA4, {a1, a2, a3, a4}));
                    if (++seen[planar_key(p)] == 1) out.points.push_back(std::move(p));
                    else ++out.metadata.collisions;
                    ++out.metadata.accepted;
                }
    out.metadata.candidates = candidates;
    out.metadata.lattice = "A4_weight";
    out.sort_points();
    return out;
}

}  // namespace qlat
