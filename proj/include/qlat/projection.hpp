#pragma once

// Exact splitting of A_4 lattice vectors into Coxeter-plane (parallel) and
// perpendicular components, the dihedral D_5 generators in the beta and
// orthonormal bases, the de Bruijn 5-cell correspondence, and the Q_5
// hypercube decomposition.

#include <Eigen/Dense>
#include <map>
#include <utility>
#include <vector>

#include "qlat/coxeter.hpp"
#include "qlat/weyl.hpp"

namespace qlat {

// Fixed normalizers of the scaled planar coordinates.  True values are
// lambda_x = X / N_x, lambda_y = Y / N_y with N_x = (2+tau) sqrt2 and
// N_y = sqrt(2(2+tau)) / tau; only the squares lie in Q(tau).
Golden par_norm2_x();   // N_x^2 = 10 + 10 tau
Golden par_norm2_y();   // N_y^2 = 6 - 2 tau
Golden perp_norm2_z();  // sigma-conjugate of N_x^2
Golden perp_norm2_w();  // sigma-conjugate of N_y^2
double par_normalizer_x();
double par_normalizer_y();
double perp_normalizer_z();
double perp_normalizer_w();  // negative (carries the sign of sigma)

/// Coxeter-plane component with exact scaled coordinates and float shadows.
struct PlanarPoint {
    Golden X;
    Golden Y;
    double fx = 0.0;
    double fy = 0.0;

    Golden squared_norm() const;  // X^2/N_x^2 + Y^2/N_y^2, exact

    friend bool operator==(const PlanarPoint& a, const PlanarPoint& b) {
        return a.X == b.X && a.Y == b.Y;
    }
};

/// E_perp component; the exact squared norm is the golden conjugate of the
/// parallel squared-norm formula for integer coordinates.
struct PerpPoint {
    Golden Z;
    Golden W;
    double fz = 0.0;
    double fw = 0.0;

    Golden squared_norm() const;
};

PlanarPoint project_parallel(const LatticeVector& v);
PerpPoint project_perp(const LatticeVector& v);

/// The 5-cell orbit (1,0,0,0) with parallel projections; the five points are
/// sqrt(2/5) (cos(2 pi k/5), sin(2 pi k/5)), k = 0..4.
std::vector<std::pair<LatticeVector, PlanarPoint>> debruijn_vertices();

struct DihedralGenerators {
    Mat4G r1_beta;             // right action on (beta1..beta4) coordinate rows
    Mat4G r2_beta;
    Eigen::Matrix4d r1_ortho;  // right action in the (xhat,yhat,zhat,what) frame
    Eigen::Matrix4d r2_ortho;
};

DihedralGenerators dihedral_generators();

/// Decomposition of the 32 vertices of the 5-cube under W(A_4) via the
/// hyperplane model (a_i = x_i - x_{i+1}); counts per orbit representative.
std::map<std::vector<long long>, int> hypercube_decompose();

}  // namespace qlat
