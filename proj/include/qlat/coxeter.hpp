#pragma once

// Diagram data for A_n (n <= 5) and H_2: Cartan matrices and their exact
// inverses, root/weight basis conversion, quaternionic embeddings of the
// simple roots and fundamental weights, and the Coxeter-plane frame.

#include <Eigen/Dense>
#include <vector>

#include "qlat/golden.hpp"
#include "qlat/quaternion.hpp"

namespace qlat {

using MatG = Eigen::Matrix<Golden, Eigen::Dynamic, Eigen::Dynamic>;
using VecG = Eigen::Matrix<Golden, Eigen::Dynamic, 1>;
using Mat4G = Eigen::Matrix<Golden, 4, 4>;
using Vec4G = Eigen::Matrix<Golden, 4, 1>;

enum class Family { A, H2 };
enum class Basis { root, weight };

struct Diagram {
    Family family = Family::A;
    int rank = 0;

    static Diagram A(int rank);
    static Diagram H2();

    int coxeter_number() const { return family == Family::A ? rank + 1 : 5; }

    friend bool operator==(const Diagram& x, const Diagram& y) {
        return x.family == y.family && x.rank == y.rank;
    }
};

inline const Diagram kA3 = Diagram::A(3);
inline const Diagram kA4 = Diagram::A(4);

/// Exact coordinate vector tagged with its basis and diagram.  Lattice
/// points carry integer coordinates; scaled orbit representatives and the
/// Coxeter-plane roots carry general field coordinates.
struct LatticeVector {
    Diagram diagram;
    Basis basis = Basis::weight;
    VecG coords;

    bool is_integral() const;

    friend bool operator==(const LatticeVector& x, const LatticeVector& y);
};

/// Entrywise exact equality (Eigen's operator== is coefficient-wise).
bool exact_equal(const MatG& a, const MatG& b);

LatticeVector weight_vector(const Diagram& d, std::vector<long> coords);
LatticeVector root_vector(const Diagram& d, std::vector<long> coords);

struct CartanPair {
    MatG matrix;
    MatG inverse;
};

/// Tridiagonal 2/-1 Cartan matrix of A_n and its closed-form inverse
/// (C^-1)_ij = min(i,j) (n+1-max(i,j)) / (n+1).  H_2 is not a crystallographic
/// Cartan matrix; use h2_gram() for its Gram matrix instead.
CartanPair cartan_matrix(const Diagram& d);

/// Gram matrix [[2,-tau],[-tau,2]] of the H_2 simple roots.
MatG h2_gram();

LatticeVector convert_basis(const LatticeVector& v, Basis target);

/// Exact Cartan-form inner product (basis-independent).
Golden inner_product(const LatticeVector& u, const LatticeVector& v);

/// Scale factor s with s * (embed(u), embed(v)) = inner_product(u, v).
/// A_3 stores true vectors (s = 1); A_4 stores sqrt2 times the true vectors
/// (s = 1/2) so that every component stays inside Q(tau).
Golden quaternion_scale(const Diagram& d);

GoldenQuaternion simple_root_quaternion(const Diagram& d, int i);
GoldenQuaternion fundamental_weight_quaternion(const Diagram& d, int i);

GoldenQuaternion embed_quaternion(const LatticeVector& v);

/// A unit vector under the Cartan form, stored as an exact root-basis
/// numerator n with normalizer^2 = n^T C n; the true vector is n / sqrt(norm2).
struct ExactAxis {
    Vec4G numerator;
    Golden norm2;
};

struct CoxeterPlaneFrame {
    Diagram diagram;
    double c = 0.0;                // 2 cos(pi/h)
    Eigen::VectorXd eigenvector;   // sin(i pi / h), odd/even sums of squares = 1

    // Exact data, populated for A_4 only.
    bool exact = false;
    Golden c_exact;                          // tau
    VecG eigenvector_numerator;              // (1, tau, tau, 1), normalizer^2 = 2 + tau
    Golden eigenvector_norm2;
    std::array<LatticeVector, 4> beta;       // unnormalized H_2 roots in the root basis
    std::array<Golden, 4> beta_norm2;        // 2+tau, 2+tau, 2+sigma, 2+sigma
    ExactAxis xhat, yhat, zhat, what;
};

CoxeterPlaneFrame coxeter_plane_frame(const Diagram& d);

/// X C X^T with X the matrix of normalized beta coefficients; equals
/// diag([[2,-tau],[-tau,2]], [[2,-sigma],[-sigma,2]]) for A_4.
Mat4G block_diagonalize_check(const Diagram& d);

/// Exact Gauss-Jordan inverse over the field.
MatG inverse_exact(const MatG& m);

MatG to_matg(const Eigen::MatrixXi& m);
Eigen::MatrixXd to_double(const MatG& m);

}  // namespace qlat
