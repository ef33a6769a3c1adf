#include "qlat/pointset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>
#include <stdexcept>

namespace qlat {

bool planar_less(const PlanarPoint& a, const PlanarPoint& b) {
    int s = (a.Y - b.Y).sign();
    if (s != 0) return s < 0;
    return (a.X - b.X).sign() < 0;
}

void PointSet2D::sort_points() {
    std::sort(points.begin(), points.end(), planar_less);
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

void emit_csv(const PointSet2D& ps, std::ostream& os) {
    os << "x,y\n";
    for (const PlanarPoint& p : ps.points)
        os << format_double(p.fx) << "," << format_double(p.fy) << "\n";
}

void emit_json(const PointSet2D& ps, std::ostream& os) {
    nlohmann::json j;
    j["metadata"] = {{"command", ps.metadata.command},
                     {"lattice", ps.metadata.lattice},
                     {"window", ps.metadata.window},
                     {"candidates", ps.metadata.candidates},
                     {"accepted", ps.metadata.accepted},
                     {"collisions", ps.metadata.collisions}};
    j["normalizers"] = {{"x", "(2+tau)*sqrt(2)"}, {"y", "sqrt(2*(2+tau))/tau"}};
    nlohmann::json pts = nlohmann::json::array();
    for (const PlanarPoint& p : ps.points) {
        nlohmann::json e;
        e["X"] = p.X;
        e["Y"] = p.Y;
        e["fx"] = format_double(p.fx);
        e["fy"] = format_double(p.fy);
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    os << j.dump(2) << "\n";
}

PointSet2D parse_json(const nlohmann::json& j) {
    PointSet2D ps;
    const nlohmann::json& meta = j.at("metadata");
    ps.metadata.command = meta.at("command").get<std::string>();
    ps.metadata.lattice = meta.at("lattice").get<std::string>();
    ps.metadata.window = meta.at("window").get<std::string>();
    ps.metadata.candidates = meta.at("candidates").get<long long>();
    ps.metadata.accepted = meta.at("accepted").get<long long>();
    ps.metadata.collisions = meta.at("collisions").get<long long>();
    for (const nlohmann::json& e : j.at("points")) {
        PlanarPoint p;
        e.at("X").get_to(p.X);
        e.at("Y").get_to(p.Y);
        p.fx = p.X.to_double() / par_normalizer_x();
        p.fy = p.Y.to_double() / par_normalizer_y();
        ps.points.push_back(std::move(p));
    }
    return ps;
}

PointSet2D parse_json_text(const std::string& text) {
    return parse_json(nlohmann::json::parse(text));
}

void emit_svg(const PointSet2D& ps, std::ostream& os, const SvgStyle& style) {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const PlanarPoint& p : ps.points) {
        if (first) {
            min_x = max_x = p.fx;
            min_y = max_y = p.fy;
            first = false;
        } else {
            min_x = std::min(min_x, p.fx);
            max_x = std::max(max_x, p.fx);
            min_y = std::min(min_y, p.fy);
            max_y = std::max(max_y, p.fy);
        }
    }
    if (first) {
        min_x = min_y = -1;
        max_x = max_y = 1;
    }
    double w = max_x - min_x, h = max_y - min_y;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    double margin = 0.05 * std::max(w, h);
    min_x -= margin;
    min_y -= margin;
    w += 2 * margin;
    h += 2 * margin;
    int height_px = static_cast<int>(style.width_px * h / w);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width_px << "\" height=\""
       << height_px << "\" viewBox=\"" << format_double(min_x) << " " << format_double(min_y)
       << " " << format_double(w) << " " << format_double(h) << "\">\n";
    // y axis points up in the data; flip per-point rather than via transform
    for (const PlanarPoint& p : ps.points) {
        double cy = min_y + (min_y + h) - p.fy;  // reflect inside the viewBox
        os << "  <circle cx=\"" << format_double(p.fx) << "\" cy=\"" << format_double(cy)
           << "\" r=\"" << format_double(style.point_radius) << "\" fill=\"" << style.fill
           << "\"/>\n";
    }
    os << "</svg>\n";
}

void emit(const PointSet2D& ps, EmitFormat format, const std::string& path,
          const SvgStyle& style) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    switch (format) {
        case EmitFormat::csv: emit_csv(ps, os); break;
        case EmitFormat::json: emit_json(ps, os); break;
        case EmitFormat::svg: emit_svg(ps, os, style); break;
    }
    if (!os.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace qlat
