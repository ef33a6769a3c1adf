#pragma once

// Generation of W(A_3), Aut(A_3), W(A_4), Aut(A_4) and the dihedral
// W(H_2) inside W(A_4); Weyl orbits of highest weights; the symbolic
// 120-vector orbit; Voronoi and dual vertex sets; the highest-root
// translation of the affine group.

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "qlat/coxeter.hpp"
#include "qlat/quaternion.hpp"

namespace qlat {

enum class GroupName { W_A3, Aut_A3, W_A4, Aut_A4, W_H2 };

/// Two-sided quaternion pair view of a group element.  The true pair is
/// stored/(sqrt2)^sqrt2_power componentwise; A_3 reflections need the power-1
/// form because their unit pairs fall outside Q(tau).
struct QuatPair {
    GoldenQuaternion p;
    GoldenQuaternion q;
    ActionKind kind = ActionKind::plain;
    int sqrt2_power = 0;  // 0 or 1
};

/// Group element.  The exact orthogonal matrix on quaternion coordinates is
/// authoritative; the integer weight-coordinate matrix and the quaternion
/// pair are cross-checking views.
struct WeylElement {
    Mat4G matrix;                    // column action on (1, e1, e2, e3)
    Eigen::MatrixXi weight_action;   // a' = W a
    std::optional<QuatPair> pair;

    GoldenQuaternion apply(const GoldenQuaternion& lambda) const;
};

/// apply inner first, then outer.
WeylElement compose(const WeylElement& outer, const WeylElement& inner);

WeylElement simple_reflection_element(const Diagram& d, int i);

/// Dynkin diagram symmetry gamma: [e1,-e1]* for A_3; for A_4 the quaternion
/// matrix is solved from the root swap alpha_1<->alpha_4, alpha_2<->alpha_3.
WeylElement diagram_symmetry_element(const Diagram& d);

std::vector<WeylElement> generate_group(GroupName which);

/// Full Weyl orbit of a dominant weight, by repeated simple reflections
/// r_i(a) = a - a_i C_i in weight coordinates.  Sorted lexicographically.
std::vector<LatticeVector> orbit(const LatticeVector& highest_weight);

/// Orbit of the generic A_4 weight (a_1,a_2,a_3,a_4): 120 integer matrices of
/// linear forms, sorted lexicographically by entries.
std::vector<Eigen::Matrix4i> symbolic_orbit();

enum class VoronoiLattice { A3_root, A3_weight, A4_root, A4_weight };
std::vector<LatticeVector> voronoi_vertices(VoronoiLattice lattice);

enum class DualPolytope { A4_weight_voronoi, A3_truncated_octahedron, A4_0110 };
std::vector<LatticeVector> dual_vertices(DualPolytope polytope);

/// v + highest root (weight coords (1,0,1) for A_3, (1,0,0,1) for A_4).
LatticeVector affine_translate(const LatticeVector& v);
LatticeVector highest_root(const Diagram& d);

/// The 24 elements of the binary tetrahedral group T.
std::vector<GoldenQuaternion> binary_tetrahedral_set();
/// sqrt2 * T': the 24 integer quaternions (+-1 +- e_i), (+-e_i +- e_j).
std::vector<GoldenQuaternion> scaled_t_prime_set();

}  // namespace qlat
