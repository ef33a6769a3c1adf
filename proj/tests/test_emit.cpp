#include "doctest.h"

#include <nlohmann/json.hpp>
#include <sstream>

#include "qlat/figures.hpp"
#include "qlat/pointset.hpp"

using namespace qlat;

namespace {
const Golden t = Golden::tau();
}

TEST_CASE("format_double is shortest round-trip text") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
    double v = 0.6324555320336759;  // sqrt(2/5)
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("csv emitter") {
    PointSet2D empty;
    std::ostringstream os;
    emit_csv(empty, os);
    CHECK(os.str() == "x,y\n");

    PointSet2D origin;
    origin.points.push_back(PlanarPoint{Golden(0), Golden(0), 0.0, 0.0});
    std::ostringstream os2;
    emit_csv(origin, os2);
    CHECK(os2.str() == "x,y\n0,0\n");
}

TEST_CASE("deterministic exact sort order") {
    PlanarPoint a{Golden(1), Golden(-1), 0, 0};
    PlanarPoint b{Golden(-1) - t, Golden(1) - t, 0, 0};
    PlanarPoint c{Golden(2) * t, Golden(0), 0, 0};
    CHECK(planar_less(a, b));   // Y = -1 < 1 - tau
    CHECK(planar_less(b, c));
    CHECK_FALSE(planar_less(c, b));
    PointSet2D ps;
    ps.points = {c, a, b};
    ps.sort_points();
    CHECK(ps.points[0] == a);
    CHECK(ps.points[1] == b);
    CHECK(ps.points[2] == c);
}

TEST_CASE("fig7a JSON records the exact de Bruijn numerators") {
    PointSet2D ps = run_figure_points("fig7a");
    REQUIRE(ps.points.size() == 5);
    // sorted by (Y, X): Y = -1, 1-tau, 0, -1+tau, 1
    CHECK(ps.points[0].X == Golden(1));
    CHECK(ps.points[0].Y == Golden(-1));
    CHECK(ps.points[1].X == Golden(-1) - t);
    CHECK(ps.points[1].Y == Golden(1) - t);
    CHECK(ps.points[2].X == Golden(2) * t);
    CHECK(ps.points[2].Y == Golden(0));
    CHECK(ps.points[3].X == Golden(-1) - t);
    CHECK(ps.points[3].Y == Golden(-1) + t);
    CHECK(ps.points[4].X == Golden(1));
    CHECK(ps.points[4].Y == Golden(1));

    std::ostringstream os;
    emit_json(ps, os);
    nlohmann::json j = nlohmann::json::parse(os.str());
    CHECK(j["points"].size() == 5);
    CHECK(j["normalizers"]["x"] == "(2+tau)*sqrt(2)");
    // the zeta^0 record: X = 2 tau -> [a,b] = [["0","1"],["2","1"]]
    CHECK(j["points"][2]["X"][0][0] == "0");
    CHECK(j["points"][2]["X"][1][0] == "2");
}

TEST_CASE("json round trip is exact") {
    for (const char* name : {"fig7a", "fig11", "fig17a"}) {
        PointSet2D ps = run_figure_points(name);
        std::ostringstream os;
        emit_json(ps, os);
        PointSet2D back = parse_json_text(os.str());
        REQUIRE(back.points.size() == ps.points.size());
        for (size_t i = 0; i < ps.points.size(); ++i) {
            CHECK(back.points[i] == ps.points[i]);
            CHECK(back.points[i].fx == ps.points[i].fx);
            CHECK(back.points[i].fy == ps.points[i].fy);
        }
        CHECK(back.metadata.command == ps.metadata.command);
        CHECK(back.metadata.lattice == ps.metadata.lattice);
        CHECK(back.metadata.accepted == ps.metadata.accepted);
    }
    CHECK_THROWS(parse_json_text("not json"));
}

TEST_CASE("svg emitter") {
    PointSet2D ps = run_figure_points("fig7a");
    std::ostringstream os;
    emit_svg(ps, os);
    std::string svg = os.str();
    CHECK(svg.find("<svg xmlns") != std::string::npos);
    CHECK(svg.find("viewBox=") != std::string::npos);
    size_t circles = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        pos += 7;
    }
    CHECK(circles == 5);
    // style options flow through
    SvgStyle style;
    style.fill = "#ff0000";
    style.point_radius = 0.05;
    std::ostringstream os2;
    emit_svg(ps, os2, style);
    CHECK(os2.str().find("#ff0000") != std::string::npos);
    CHECK(os2.str().find("r=\"0.05\"") != std::string::npos);
    // empty set still yields a valid document
    std::ostringstream os3;
    emit_svg(PointSet2D{}, os3);
    CHECK(os3.str().find("</svg>") != std::string::npos);
}

TEST_CASE("figure presets") {
    CHECK(figure_presets().size() == 12);
    CHECK(run_figure_points("fig7a").points.size() == 5);
    CHECK(run_figure_points("fig7b").points.size() == 5);
    CHECK(run_figure_points("fig8a").points.size() == 10);
    CHECK(run_figure_points("fig8b").points.size() == 10);
    CHECK(run_figure_points("fig10").points.size() == 20);
    CHECK(run_figure_points("fig11").points.size() == 30);
    CHECK(run_figure_points("fig12").points.size() == 120);
    CHECK(run_figure_points("fig13").points.size() == 30);
    CHECK_THROWS_AS(run_figure_points("fig99"), std::invalid_argument);
}

TEST_CASE("fig11 lies on three tau-scaled circles") {
    PointSet2D ps = run_figure_points("fig11");
    Golden f(Rational(2, 5));
    std::map<std::string, int> counts;
    for (const PlanarPoint& p : ps.points) {
        Golden n2 = p.squared_norm();
        if (n2 == f * Golden::sigma() * Golden::sigma()) ++counts["s"];
        else if (n2 == f) ++counts["m"];
        else if (n2 == f * t * t) ++counts["l"];
        else ++counts["other"];
    }
    CHECK(counts["s"] == 10);
    CHECK(counts["m"] == 10);
    CHECK(counts["l"] == 10);
    CHECK(counts["other"] == 0);
}

TEST_CASE("emitted bytes are identical across runs") {
    for (const char* name : {"fig7a", "fig10", "fig17a"}) {
        std::ostringstream a, b, sa, sb, ja, jb;
        emit_csv(run_figure_points(name), a);
        emit_csv(run_figure_points(name), b);
        emit_svg(run_figure_points(name), sa);
        emit_svg(run_figure_points(name), sb);
        emit_json(run_figure_points(name), ja);
        emit_json(run_figure_points(name), jb);
        CHECK(a.str() == b.str());
        CHECK(sa.str() == sb.str());
        CHECK(ja.str() == jb.str());
    }
}
