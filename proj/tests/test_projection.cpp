#include "doctest.h"

#include <cmath>
#include <random>

#include "qlat/projection.hpp"

using namespace qlat;

namespace {
const Golden t = Golden::tau();
const Golden s = Golden::sigma();
const double kSqrt25 = std::sqrt(0.4);
}  // namespace

TEST_CASE("fixed normalizers") {
    CHECK(par_norm2_x() == Golden(10) + Golden(10) * t);
    CHECK(par_norm2_y() == Golden(6) - Golden(2) * t);
    CHECK(perp_norm2_z() == par_norm2_x().conjugate());
    CHECK(perp_norm2_w() == par_norm2_y().conjugate());
    CHECK(par_normalizer_x() * par_normalizer_x() ==
          doctest::Approx(par_norm2_x().to_double()).epsilon(1e-12));
    CHECK(par_normalizer_y() * par_normalizer_y() ==
          doctest::Approx(par_norm2_y().to_double()).epsilon(1e-12));
    CHECK(perp_normalizer_w() < 0);  // carries the sign of sigma
}

TEST_CASE("parallel projection of omega_1") {
    PlanarPoint p = project_parallel(weight_vector(kA4, {1, 0, 0, 0}));
    CHECK(p.X == Golden(1));
    CHECK(p.Y == Golden(1));
    CHECK(p.squared_norm() == Golden(Rational(2, 5)));
    // sqrt(2/5) zeta^1 = sqrt(2/5)(cos 72, sin 72)
    CHECK(p.fx == doctest::Approx(kSqrt25 * std::cos(2 * M_PI / 5)).epsilon(1e-13));
    CHECK(p.fy == doctest::Approx(kSqrt25 * std::sin(2 * M_PI / 5)).epsilon(1e-13));
}

TEST_CASE("de Bruijn pentagon") {
    auto pts = debruijn_vertices();
    CHECK(pts.size() == 5);
    int matched = 0;
    for (const auto& [v, p] : pts) {
        CHECK(p.squared_norm() == Golden(Rational(2, 5)));
        for (int k = 0; k < 5; ++k) {
            double ang = 2 * M_PI * k / 5;
            if (std::fabs(p.fx - kSqrt25 * std::cos(ang)) < 1e-12 &&
                std::fabs(p.fy - kSqrt25 * std::sin(ang)) < 1e-12)
                ++matched;
        }
    }
    CHECK(matched == 5);
    // exact table: (0,-1,1,0) -> (X,Y) = (2 tau, 0), the zeta^0 point
    PlanarPoint p0 = project_parallel(weight_vector(kA4, {0, -1, 1, 0}));
    CHECK(p0.X == Golden(2) * t);
    CHECK(p0.Y == Golden(0));
    // the (0,0,0,1) 5-cell is the negative pentagon
    PlanarPoint q = project_parallel(weight_vector(kA4, {0, 0, 0, -1}));
    CHECK(q.X == Golden(1));
    CHECK(q.Y == Golden(-1));
}

TEST_CASE("perpendicular projection is the golden conjugate") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coord(-6, 6);
    for (int i = 0; i < 1000; ++i) {
        LatticeVector v = weight_vector(kA4, {coord(rng), coord(rng), coord(rng), coord(rng)});
        PerpPoint q = project_perp(v);
        PlanarPoint p = project_parallel(v);
        CHECK(q.Z == p.X.conjugate());
        CHECK(q.W == p.Y.conjugate());
        CHECK(q.squared_norm() == p.squared_norm().conjugate());
        CHECK(p.squared_norm() + q.squared_norm() == inner_product(v, v));
    }
}

TEST_CASE("root system projects onto two decagons") {
    std::map<std::string, int> counts;
    Golden r_small = (Golden(6) - Golden(2) * t) / Golden(5);
    Golden r_large = (Golden(4) + Golden(2) * t) / Golden(5);
    for (const LatticeVector& v : orbit(weight_vector(kA4, {1, 0, 0, 1}))) {
        Golden n2 = project_parallel(v).squared_norm();
        if (n2 == r_small) ++counts["small"];
        else if (n2 == r_large) ++counts["large"];
        else ++counts["other"];
    }
    CHECK(counts["small"] == 10);
    CHECK(counts["large"] == 10);
    CHECK(counts["other"] == 0);
    // radius ratio is tau: (4+2tau)/5 = tau^2 (6-2tau)/5
    CHECK(r_large == t * t * r_small);
}

TEST_CASE("dihedral generators in the beta basis match the exact matrices") {
    DihedralGenerators g = dihedral_generators();
    Mat4G r1, r2;
    r1 << Golden(-1), 0, 0, 0, t, Golden(1), 0, 0, 0, 0, Golden(-1), 0, 0, 0, s, Golden(1);
    r2 << Golden(1), t, 0, 0, 0, Golden(-1), 0, 0, 0, 0, Golden(1), s, 0, 0, 0, Golden(-1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(g.r1_beta(i, j) == r1(i, j));
            CHECK(g.r2_beta(i, j) == r2(i, j));
        }
}

TEST_CASE("orthonormal-frame generators and the Coxeter rotation") {
    DihedralGenerators g = dihedral_generators();
    double rt = t.to_double(), rs = s.to_double();
    double sp = std::sqrt(2 + rs), sm = std::sqrt(2 + rt);
    // Each reflection block is (1/2)[[-c, +-root],[+-root, c]] with det -1.
    CHECK(std::fabs(g.r1_ortho(0, 0) + rt / 2) < 1e-12);
    CHECK(std::fabs(std::fabs(g.r1_ortho(0, 1)) - sp / 2) < 1e-12);
    CHECK(std::fabs(g.r1_ortho(1, 1) - rt / 2) < 1e-12);
    CHECK(std::fabs(g.r1_ortho(2, 2) + rs / 2) < 1e-12);
    CHECK(std::fabs(std::fabs(g.r1_ortho(2, 3)) - sm / 2) < 1e-12);
    // rotation by 72 in E_par, 144 in E_perp
    Eigen::Matrix4d rot = g.r2_ortho * g.r1_ortho;
    CHECK(std::fabs(rot(0, 0) - std::cos(2 * M_PI / 5)) < 1e-12);
    CHECK(std::fabs(std::fabs(rot(0, 1)) - std::sin(2 * M_PI / 5)) < 1e-12);
    CHECK(std::fabs(rot(2, 2) - std::cos(4 * M_PI / 5)) < 1e-12);
    CHECK(std::fabs(std::fabs(rot(2, 3)) - std::sin(4 * M_PI / 5)) < 1e-12);
    // exact order five in the beta basis
    Mat4G m = g.r1_beta * g.r2_beta;
    Mat4G acc = m;
    for (int k = 1; k < 5; ++k) acc = acc * m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(acc(i, j) == Golden(i == j ? 1 : 0));
}

TEST_CASE("hypercube decomposition histogram") {
    std::map<std::vector<long long>, int> h = hypercube_decompose();
    CHECK(h.size() == 5);
    CHECK(h[{0, 0, 0, 0}] == 2);
    CHECK(h[{1, 0, 0, 0}] == 5);
    CHECK(h[{0, 1, 0, 0}] == 10);
    CHECK(h[{0, 0, 1, 0}] == 10);
    CHECK(h[{0, 0, 0, 1}] == 5);
    int total = 0;
    for (const auto& [k, v] : h) total += v;
    CHECK(total == 32);
}

TEST_CASE("Pythagoras on random vectors") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> coord(-8, 8);
    for (int i = 0; i < 10000; ++i) {
        LatticeVector v = weight_vector(kA4, {coord(rng), coord(rng), coord(rng), coord(rng)});
        CHECK(project_parallel(v).squared_norm() + project_perp(v).squared_norm() ==
              inner_product(v, v));
    }
}

TEST_CASE("root-basis input converts before projecting") {
    LatticeVector m = root_vector(kA4, {1, 1, 1, 1});  // the highest root
    LatticeVector a = weight_vector(kA4, {1, 0, 0, 1});
    CHECK(project_parallel(m) == project_parallel(a));
    CHECK_THROWS_AS(project_parallel(weight_vector(kA3, {1, 0, 0})), std::invalid_argument);
}
