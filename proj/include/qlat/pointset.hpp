#pragma once

// Planar point-set carrier for figure data and the CSV/JSON/SVG emitters.
// All emitters are byte-deterministic for identical inputs and config.

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qlat/projection.hpp"

namespace qlat {

struct PointSetMetadata {
    std::string command;   // canonical generating command
    std::string lattice;
    std::string window;
    long long candidates = 0;
    long long accepted = 0;
    long long collisions = 0;  // distinct lattice points mapping to one planar point
};

/// Planar point set with exact scaled coordinates (fixed normalizers N_x, N_y)
/// and float shadows; sorted by (Y, X) with exact comparisons.
struct PointSet2D {
    std::vector<PlanarPoint> points;
    PointSetMetadata metadata;

    void sort_points();
};

/// Exact comparison used for the deterministic point order.
bool planar_less(const PlanarPoint& a, const PlanarPoint& b);

struct SvgStyle {
    double point_radius = 0.012;
    std::string fill = "#1f4e79";
    int width_px = 900;
};

/// Shortest round-trip decimal text for a double.
std::string format_double(double v);

void emit_csv(const PointSet2D& ps, std::ostream& os);
void emit_json(const PointSet2D& ps, std::ostream& os);
void emit_svg(const PointSet2D& ps, std::ostream& os, const SvgStyle& style = {});

PointSet2D parse_json(const nlohmann::json& j);
PointSet2D parse_json_text(const std::string& text);

enum class EmitFormat { csv, json, svg };
void emit(const PointSet2D& ps, EmitFormat format, const std::string& path,
          const SvgStyle& style = {});

}  // namespace qlat
