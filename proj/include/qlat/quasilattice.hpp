#pragma once

// Lattice enumeration and the strip (cut-and-project) and slab projections
// producing decagonal quasicrystal point sets.  Window membership is tested
// exactly; the enumeration box is derived from the exact Gram data so no
// accepted point can fall outside the scanned range.

#include <optional>

#include "qlat/pointset.hpp"

namespace qlat {

enum class StripLattice { A4_root, A4_weight };
enum class WindowSource { root_voronoi, weight_voronoi, custom };

struct Window {
    Golden squared_radius;
    WindowSource source = WindowSource::custom;
};

/// Window whose squared radius is the largest exact perpendicular squared
/// norm over the Voronoi-cell vertices of the chosen lattice.
Window window_from_voronoi(StripLattice lattice);
Window custom_window(Golden squared_radius);

struct StripConfig {
    StripLattice lattice = StripLattice::A4_root;
    Window window;
    Golden par_squared_radius;
    std::optional<LatticeVector> offset;  // applied before projection
    long long max_box = 20'000'000;       // enumeration cap (box volume)
    int threads = 1;
};

struct StripResult {
    PointSet2D points;
    std::vector<LatticeVector> accepted;  // the lattice points inside the strip
};

/// Accept every lattice point v with perp^2(v+offset) <= window radius and
/// par^2(v+offset) <= par radius (both closed, tested exactly); project the
/// survivors onto the Coxeter plane.
StripResult strip_project(const StripConfig& config);

/// Projection of all weight vectors with |a_i| <= amax and |sum a_i| <= smax;
/// no perpendicular cut (decorative slab distributions).
PointSet2D slab_project(int amax, int smax);

}  // namespace qlat
