#pragma once

// Figure-reproduction presets: each preset is one documented pipeline
// invocation producing a planar point set (orbit projection, Voronoi
// projection, strip projection, or slab distribution).

#include <string>
#include <vector>

#include "qlat/quasilattice.hpp"

namespace qlat {

struct FigurePreset {
    std::string name;
    std::string description;  // the bound command, documented
};

const std::vector<FigurePreset>& figure_presets();

/// Compute the preset's point set.  Throws std::invalid_argument for an
/// unknown name.
PointSet2D run_figure_points(const std::string& name, int threads = 1,
                             long long max_box = 20'000'000);

/// Write <out_dir>/<name>.csv and <out_dir>/<name>.svg.  Returns the paths.
std::vector<std::string> run_figure(const std::string& name, const std::string& out_dir,
                                    const SvgStyle& style = {}, int threads = 1,
                                    long long max_box = 20'000'000);

}  // namespace qlat
