#include "qlat/coxeter.hpp"

#include <cmath>
#include <stdexcept>

namespace qlat {

namespace {

const Golden kTau = Golden::tau();
const Golden kSigma = Golden::sigma();

void require_A(const Diagram& d, const char* op) {
    if (d.family != Family::A) throw std::invalid_argument(std::string(op) + ": unsupported diagram");
}

void require_A4(const Diagram& d, const char* op) {
    if (!(d == kA4)) throw std::invalid_argument(std::string(op) + ": A_4 only");
}

}  // namespace

Diagram Diagram::A(int rank) {
    if (rank < 1 || rank > 5) throw std::invalid_argument("Diagram::A: rank must be 1..5");
    return Diagram{Family::A, rank};
}

Diagram Diagram::H2() { return Diagram{Family::H2, 2}; }

bool LatticeVector::is_integral() const {
    for (int i = 0; i < coords.rows(); ++i) {
        const Golden& c = coords(i);
        if (!c.is_rational() || boost::multiprecision::denominator(c.a()) != 1) return false;
    }
    return true;
}

bool exact_equal(const MatG& a, const MatG& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool operator==(const LatticeVector& x, const LatticeVector& y) {
    return x.diagram == y.diagram && x.basis == y.basis && exact_equal(x.coords, y.coords);
}

LatticeVector weight_vector(const Diagram& d, std::vector<long> coords) {
    if (static_cast<int>(coords.size()) != d.rank)
        throw std::invalid_argument("weight_vector: coordinate count != rank");
    VecG v(d.rank);
    for (int i = 0; i < d.rank; ++i) v(i) = Golden(static_cast<long long>(coords[i]));
    return LatticeVector{d, Basis::weight, std::move(v)};
}

LatticeVector root_vector(const Diagram& d, std::vector<long> coords) {
    LatticeVector v = weight_vector(d, std::move(coords));
    v.basis = Basis::root;
    return v;
}

CartanPair cartan_matrix(const Diagram& d) {
    require_A(d, "cartan_matrix");
    const int n = d.rank;
    MatG c = MatG::Zero(n, n);
    MatG inv(n, n);
    for (int i = 0; i < n; ++i) {
        c(i, i) = 2;
        if (i + 1 < n) {
            c(i, i + 1) = -1;
            c(i + 1, i) = -1;
        }
        for (int j = 0; j < n; ++j) {
            long long mn = std::min(i, j) + 1;
            long long mx = std::max(i, j) + 1;
            inv(i, j) = Golden(Rational(mn * (n + 1 - mx), n + 1));
        }
    }
    return {std::move(c), std::move(inv)};
}

MatG h2_gram() {
    MatG g(2, 2);
    g << Golden(2), -kTau, -kTau, Golden(2);
    return g;
}

static MatG gram(const Diagram& d, Basis basis) {
    if (d.family == Family::A) {
        CartanPair c = cartan_matrix(d);
        return basis == Basis::root ? c.matrix : c.inverse;
    }
    MatG g = h2_gram();
    return basis == Basis::root ? g : inverse_exact(g);
}

LatticeVector convert_basis(const LatticeVector& v, Basis target) {
    if (v.basis == target) return v;
    if (v.diagram.family == Family::A) {
        CartanPair c = cartan_matrix(v.diagram);
        const MatG& m = target == Basis::weight ? c.matrix : c.inverse;
        return LatticeVector{v.diagram, target, m * v.coords};
    }
    MatG g = h2_gram();
    const MatG m = target == Basis::weight ? g : inverse_exact(g);
    return LatticeVector{v.diagram, target, m * v.coords};
}

Golden inner_product(const LatticeVector& u, const LatticeVector& v) {
    if (!(u.diagram == v.diagram)) throw std::invalid_argument("inner_product: diagram mismatch");
    LatticeVector w = v.basis == u.basis ? v : convert_basis(v, u.basis);
    VecG gv = gram(u.diagram, u.basis) * w.coords;
    Golden acc = 0;
    for (int i = 0; i < gv.rows(); ++i) acc += u.coords(i) * gv(i);
    return acc;
}

Golden quaternion_scale(const Diagram& d) {
    if (d == kA3) return 1;
    if (d == kA4) return Golden(Rational(1, 2));
    throw std::invalid_argument("quaternion_scale: A_3 or A_4 only");
}

GoldenQuaternion simple_root_quaternion(const Diagram& d, int i) {
    if (i < 0 || i >= d.rank) throw std::invalid_argument("simple_root_quaternion: index");
    if (d == kA3) {
        static const GoldenQuaternion roots[3] = {
            {0, 1, 1, 0},   // e1 + e2
            {0, 0, -1, 1},  // e3 - e2
            {0, -1, 1, 0},  // e2 - e1
        };
        return roots[i];
    }
    if (d == kA4) {
        // sqrt2 times the true simple roots; all components in Q(tau).
        static const GoldenQuaternion roots[4] = {
            {-2, 0, 0, 0},
            {1, 1, 1, 1},
            {0, -2, 0, 0},
            {0, 1, -kSigma, -kTau},
        };
        return roots[i];
    }
    throw std::invalid_argument("simple_root_quaternion: A_3 or A_4 only");
}

GoldenQuaternion fundamental_weight_quaternion(const Diagram& d, int i) {
    CartanPair c = cartan_matrix(d);
    GoldenQuaternion w;
    for (int j = 0; j < d.rank; ++j) w += c.inverse(i, j) * simple_root_quaternion(d, j);
    return w;
}

GoldenQuaternion embed_quaternion(const LatticeVector& v) {
    if (!(v.diagram == kA3) && !(v.diagram == kA4))
        throw std::invalid_argument("embed_quaternion: A_3 or A_4 only");
    LatticeVector m = convert_basis(v, Basis::root);
    GoldenQuaternion q;
    for (int i = 0; i < v.diagram.rank; ++i)
        q += m.coords(i) * simple_root_quaternion(v.diagram, i);
    return q;
}

CoxeterPlaneFrame coxeter_plane_frame(const Diagram& d) {
    require_A(d, "coxeter_plane_frame");
    CoxeterPlaneFrame f;
    f.diagram = d;
    const int n = d.rank;
    const int h = d.coxeter_number();
    f.c = 2.0 * std::cos(M_PI / h);
    f.eigenvector.resize(n);
    double odd2 = 0.0;
    for (int i = 0; i < n; ++i) {
        f.eigenvector(i) = std::sin((i + 1) * M_PI / h);
        if (i % 2 == 0) odd2 += f.eigenvector(i) * f.eigenvector(i);
    }
    f.eigenvector /= std::sqrt(odd2);

    if (!(d == kA4)) return f;

    f.exact = true;
    f.c_exact = kTau;
    f.eigenvector_numerator.resize(4);
    f.eigenvector_numerator << Golden(1), kTau, kTau, Golden(1);
    f.eigenvector_norm2 = Golden(2) + kTau;

    auto root_vec = [&](Golden a, Golden b, Golden c, Golden e) {
        VecG v(4);
        v << std::move(a), std::move(b), std::move(c), std::move(e);
        return LatticeVector{d, Basis::root, std::move(v)};
    };
    // beta_1 = (alpha1 + tau alpha3)/sqrt(2+tau), beta_2 = (tau alpha2 + alpha4)/sqrt(2+tau);
    // beta_3, beta_4 are the sigma-conjugate pair spanning E_perp.
    f.beta = {root_vec(1, 0, kTau, 0), root_vec(0, kTau, 0, 1), root_vec(1, 0, kSigma, 0),
              root_vec(0, kSigma, 0, 1)};
    f.beta_norm2 = {Golden(2) + kTau, Golden(2) + kTau, Golden(2) + kSigma, Golden(2) + kSigma};

    auto axis = [&](Golden a, Golden b, Golden c, Golden e) {
        ExactAxis ax;
        ax.numerator << std::move(a), std::move(b), std::move(c), std::move(e);
        LatticeVector lv{d, Basis::root, VecG(ax.numerator)};
        ax.norm2 = inner_product(lv, lv);
        return ax;
    };
    // Signs fixed so that the projected 5-cell (1,0,0,0) lands on the de Bruijn
    // pentagon sqrt(2/5) zeta^k with zeta = exp(2 pi i/5).
    f.xhat = axis(1, -kTau, kTau, -1);
    f.yhat = axis(1, kTau, kTau, 1);
    f.zhat = axis(1, -kSigma, kSigma, -1);
    f.what = axis(1, kSigma, kSigma, 1);
    return f;
}

Mat4G block_diagonalize_check(const Diagram& d) {
    require_A4(d, "block_diagonalize_check");
    CoxeterPlaneFrame f = coxeter_plane_frame(d);
    CartanPair c = cartan_matrix(d);
    Mat4G out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            VecG cv = c.matrix * f.beta[j].coords;
            Golden num = 0;
            for (int k = 0; k < 4; ++k) num += f.beta[i].coords(k) * cv(k);
            if (i / 2 == j / 2) {
                out(i, j) = num / f.beta_norm2[i];  // same plane: common normalizer
            } else {
                if (!num.is_zero())
                    throw std::logic_error("block_diagonalize_check: cross-plane not orthogonal");
                out(i, j) = 0;
            }
        }
    }
    return out;
}

MatG inverse_exact(const MatG& m) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw std::invalid_argument("inverse_exact: square matrix required");
    MatG a = m;
    MatG inv = MatG::Zero(n, n);
    for (int i = 0; i < n; ++i) inv(i, i) = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("inverse_exact: singular matrix");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        Golden scale = a(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            Golden factor = a(r, col);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= factor * a(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

MatG to_matg(const Eigen::MatrixXi& m) {
    MatG out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

Eigen::MatrixXd to_double(const MatG& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

}  // namespace qlat
