#include "doctest.h"

#include <array>
#include <set>

#include "qlat/weyl.hpp"

using namespace qlat;

namespace {

// Frozen reference rows of the symbolic orbit as 4x4 integer coefficient
// matrices (row i = the linear form of the i-th image coordinate in a_1..a_4).
const std::vector<std::array<int, 16>> kFrozenRows = {
#include "orbit_rows.inc"
};

std::array<int, 16> key_of(const Eigen::Matrix4i& m) {
    std::array<int, 16> k;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) k[i * 4 + j] = m(i, j);
    return k;
}

}  // namespace

TEST_CASE("group orders") {
    CHECK(generate_group(GroupName::W_A3).size() == 24);
    CHECK(generate_group(GroupName::Aut_A3).size() == 48);
    CHECK(generate_group(GroupName::W_A4).size() == 120);
    CHECK(generate_group(GroupName::Aut_A4).size() == 240);
    CHECK(generate_group(GroupName::W_H2).size() == 10);
}

TEST_CASE("simple reflections in weight coordinates") {
    WeylElement r1 = simple_reflection_element(kA4, 0);
    Eigen::Vector4i a(1, 0, 0, 0);
    Eigen::Vector4i image = r1.weight_action * a;
    CHECK(image == Eigen::Vector4i(-1, 1, 0, 0));
    // r_i fixes omega_j for j != i
    Eigen::Vector4i w2(0, 1, 0, 0);
    CHECK(r1.weight_action * w2 == w2);
}

TEST_CASE("orbit size table") {
    auto size_of = [](const Diagram& d, std::vector<long> w) {
        return orbit(weight_vector(d, std::move(w))).size();
    };
    CHECK(size_of(kA4, {1, 0, 0, 0}) == 5);
    CHECK(size_of(kA4, {0, 1, 0, 0}) == 10);
    CHECK(size_of(kA4, {0, 0, 1, 0}) == 10);
    CHECK(size_of(kA4, {0, 0, 0, 1}) == 5);
    CHECK(size_of(kA4, {1, 0, 0, 1}) == 20);
    CHECK(size_of(kA4, {0, 1, 1, 0}) == 30);
    CHECK(size_of(kA4, {1, 1, 1, 1}) == 120);
    CHECK(size_of(kA3, {1, 0, 0}) == 4);
    CHECK(size_of(kA3, {0, 1, 0}) == 6);
    CHECK(size_of(kA3, {1, 0, 1}) == 12);
    CHECK(size_of(kA3, {1, 1, 1}) == 24);
    CHECK_THROWS_AS(orbit(weight_vector(kA4, {-1, 0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(orbit(root_vector(kA4, {1, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("symbolic orbit contains the frozen reference rows") {
    std::vector<Eigen::Matrix4i> forms = symbolic_orbit();
    CHECK(forms.size() == 120);
    std::set<std::array<int, 16>> keys;
    for (const Eigen::Matrix4i& m : forms) keys.insert(key_of(m));
    CHECK(keys.size() == 120);
    // every frozen reference row appears
    for (const auto& row : kFrozenRows) CHECK(keys.count(row) == 1);
    // spot checks: the identity row and the longest element (-a_4,-a_3,-a_2,-a_1)
    Eigen::Matrix4i id = Eigen::Matrix4i::Identity();
    CHECK(keys.count(key_of(id)) == 1);
    Eigen::Matrix4i w0 = Eigen::Matrix4i::Zero();
    for (int i = 0; i < 4; ++i) w0(i, 3 - i) = -1;
    CHECK(keys.count(key_of(w0)) == 1);
    // first printed row: (a2+a3+a4, -a4, -a1-a2-a3, a1+a2)
    std::array<int, 16> first = {0, 1, 1, 1, 0, 0, 0, -1, -1, -1, -1, 0, 1, 1, 0, 0};
    CHECK(keys.count(first) == 1);
}

TEST_CASE("Voronoi and dual vertex sets") {
    CHECK(voronoi_vertices(VoronoiLattice::A4_root).size() == 30);
    CHECK(voronoi_vertices(VoronoiLattice::A4_weight).size() == 120);
    CHECK(voronoi_vertices(VoronoiLattice::A3_root).size() == 14);    // rhombic dodecahedron
    CHECK(voronoi_vertices(VoronoiLattice::A3_weight).size() == 24);  // truncated octahedron
    CHECK(dual_vertices(DualPolytope::A4_weight_voronoi).size() == 30);
    CHECK(dual_vertices(DualPolytope::A3_truncated_octahedron).size() == 14);
    CHECK(dual_vertices(DualPolytope::A4_0110).size() == 10);
    // the scaled dual orbits carry rational (non-integer) coordinates
    bool any_scaled = false;
    for (const LatticeVector& v : dual_vertices(DualPolytope::A4_weight_voronoi))
        if (!v.is_integral()) any_scaled = true;
    CHECK(any_scaled);
}

TEST_CASE("highest root and the affine translation") {
    CHECK(highest_root(kA4) == weight_vector(kA4, {1, 0, 0, 1}));
    CHECK(highest_root(kA3) == weight_vector(kA3, {1, 0, 1}));
    LatticeVector origin = weight_vector(kA4, {0, 0, 0, 0});
    CHECK(affine_translate(origin) == highest_root(kA4));
    LatticeVector twice = affine_translate(affine_translate(origin));
    CHECK(twice == weight_vector(kA4, {2, 0, 0, 2}));
    // in the root basis the translation adds (1,1,1,1)
    LatticeVector r = root_vector(kA4, {0, 1, 0, 0});
    CHECK(affine_translate(r) == root_vector(kA4, {1, 2, 1, 1}));
}

TEST_CASE("binary tetrahedral sets") {
    std::vector<Quat> t = binary_tetrahedral_set();
    CHECK(t.size() == 24);
    std::set<std::string> keys;
    auto key = [](const Quat& q) {
        std::string s;
        for (int i = 0; i < 4; ++i) s += q[i].str() + "|";
        return s;
    };
    for (const Quat& q : t) {
        CHECK(quat_scalar_product(q, q) == Golden(1));
        keys.insert(key(q));
    }
    CHECK(keys.size() == 24);
    for (const Quat& a : t)
        for (const Quat& b : t) CHECK(keys.count(key(a * b)) == 1);  // closed group

    std::vector<Quat> t2 = scaled_t_prime_set();
    CHECK(t2.size() == 24);
    for (const Quat& q : t2) CHECK(quat_scalar_product(q, q) == Golden(2));
}

TEST_CASE("quaternion pair view agrees with the matrix action") {
    for (GroupName g : {GroupName::W_A3, GroupName::W_A4}) {
        for (const WeylElement& e : generate_group(g)) {
            REQUIRE(e.pair.has_value());
            const QuatPair& pr = *e.pair;
            for (int b = 0; b < 4; ++b) {
                Quat lambda = Quat::unit(b);
                Quat via_pair = apply_element(pr.p, pr.q, pr.kind, lambda);
                if (pr.sqrt2_power == 1) via_pair = Golden(Rational(1, 2)) * via_pair;
                CHECK(via_pair == e.apply(lambda));
            }
        }
    }
}

TEST_CASE("compose matches matrix product and the group is closed") {
    std::vector<WeylElement> group = generate_group(GroupName::W_H2);
    std::set<std::string> keys;
    auto key = [](const Eigen::MatrixXi& m) {
        std::string s;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) s += std::to_string(m(i, j)) + ",";
        return s;
    };
    for (const WeylElement& e : group) keys.insert(key(e.weight_action));
    for (const WeylElement& a : group)
        for (const WeylElement& b : group) {
            WeylElement c = compose(a, b);
            CHECK(keys.count(key(c.weight_action)) == 1);
        }
}

TEST_CASE("diagram symmetry") {
    WeylElement g4 = diagram_symmetry_element(kA4);
    // gamma swaps alpha_1 <-> alpha_4 and alpha_2 <-> alpha_3
    for (int i = 0; i < 4; ++i) {
        Quat image = g4.apply(simple_root_quaternion(kA4, i));
        CHECK(image == simple_root_quaternion(kA4, 3 - i));
    }
    WeylElement g3 = diagram_symmetry_element(kA3);
    CHECK(g3.apply(simple_root_quaternion(kA3, 0)) == simple_root_quaternion(kA3, 2));
    CHECK(g3.apply(simple_root_quaternion(kA3, 1)) == simple_root_quaternion(kA3, 1));
}
