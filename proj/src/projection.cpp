#include "qlat/projection.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qlat {

namespace {

const Golden kTau = Golden::tau();
const Golden kSigma = Golden::sigma();
constexpr double kTauD = 1.6180339887498948482;
constexpr double kSigmaD = 1.0 - kTauD;

VecG weight_coords_a4(const LatticeVector& v) {
    if (!(v.diagram == kA4)) throw std::invalid_argument("projection: A_4 vectors only");
    return convert_basis(v, Basis::weight).coords;
}

}  // namespace

Golden par_norm2_x() { return Golden(10) + Golden(10) * kTau; }
Golden par_norm2_y() { return Golden(6) - Golden(2) * kTau; }
Golden perp_norm2_z() { return par_norm2_x().conjugate(); }
Golden perp_norm2_w() { return par_norm2_y().conjugate(); }

double par_normalizer_x() { return (2.0 + kTauD) * std::sqrt(2.0); }
double par_normalizer_y() { return std::sqrt(2.0 * (2.0 + kTauD)) / kTauD; }
double perp_normalizer_z() { return (2.0 + kSigmaD) * std::sqrt(2.0); }
double perp_normalizer_w() { return std::sqrt(2.0 * (2.0 + kSigmaD)) / kSigmaD; }

Golden PlanarPoint::squared_norm() const {
    return X * X / par_norm2_x() + Y * Y / par_norm2_y();
}

Golden PerpPoint::squared_norm() const {
    return Z * Z / perp_norm2_z() + W * W / perp_norm2_w();
}

PlanarPoint project_parallel(const LatticeVector& v) {
    VecG a = weight_coords_a4(v);
    PlanarPoint p;
    p.X = a(0) - a(3) + kTau * (a(2) - a(1));
    p.Y = a(0) + a(3) + kTau * (a(1) + a(2));
    p.fx = p.X.to_double() / par_normalizer_x();
    p.fy = p.Y.to_double() / par_normalizer_y();
    return p;
}

PerpPoint project_perp(const LatticeVector& v) {
    VecG a = weight_coords_a4(v);
    PerpPoint p;
    p.Z = a(0) - a(3) + kSigma * (a(2) - a(1));
    p.W = a(0) + a(3) + kSigma * (a(1) + a(2));
    p.fz = p.Z.to_double() / perp_normalizer_z();
    p.fw = p.W.to_double() / perp_normalizer_w();
    return p;
}

std::vector<std::pair<LatticeVector, PlanarPoint>> debruijn_vertices() {
    std::vector<std::pair<LatticeVector, PlanarPoint>> out;
    for (const LatticeVector& v : orbit(weight_vector(kA4, {1, 0, 0, 0})))
        out.emplace_back(v, project_parallel(v));
    return out;
}

DihedralGenerators dihedral_generators() {
    CartanPair c = cartan_matrix(kA4);
    CoxeterPlaneFrame f = coxeter_plane_frame(kA4);
    auto r = [&](int i) { return simple_reflection_element(kA4, i); };
    std::array<WeylElement, 2> gens{compose(r(0), r(2)), compose(r(1), r(3))};

    DihedralGenerators out;
    Mat4G* beta_forms[2] = {&out.r1_beta, &out.r2_beta};
    Eigen::Matrix4d* ortho_forms[2] = {&out.r1_ortho, &out.r2_ortho};

    // beta vectors and frame axes as root-coordinate columns
    MatG beta_cols(4, 4);
    for (int j = 0; j < 4; ++j) beta_cols.col(j) = f.beta[j].coords;
    MatG beta_inv = inverse_exact(beta_cols);
    const ExactAxis* axes[4] = {&f.xhat, &f.yhat, &f.zhat, &f.what};

    for (int g = 0; g < 2; ++g) {
        // root-coordinate action: m' = C^-1 W C m
        MatG w = to_matg(gens[g].weight_action);
        MatG root_action = c.inverse * w * c.matrix;

        // rows of the right-action matrix are the beta-basis expansions of
        // the images; within a plane the shared normalizer cancels exactly
        for (int k = 0; k < 4; ++k) {
            VecG image = root_action * f.beta[k].coords;
            VecG coeff = beta_inv * image;
            for (int l = 0; l < 4; ++l) {
                if (k / 2 != l / 2 && !coeff(l).is_zero())
                    throw std::logic_error("dihedral_generators: planes not preserved");
                (*beta_forms[g])(k, l) = coeff(l);
            }
        }

        // orthonormal-frame form: entry (k,l) = (g fhat_k, fhat_l)
        for (int k = 0; k < 4; ++k) {
            VecG image = root_action * axes[k]->numerator;
            VecG ci = c.matrix * image;
            for (int l = 0; l < 4; ++l) {
                Golden num = 0;
                for (int m = 0; m < 4; ++m) num += axes[l]->numerator(m) * ci(m);
                (*ortho_forms[g])(k, l) =
                    num.to_double() /
                    std::sqrt(axes[k]->norm2.to_double() * axes[l]->norm2.to_double());
            }
        }
    }
    return out;
}

std::map<std::vector<long long>, int> hypercube_decompose() {
    // orbit membership tables for the five candidate representatives
    const std::vector<std::vector<long>> reps = {
        {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    std::vector<std::set<std::vector<long long>>> members;
    for (const auto& r : reps) {
        std::set<std::vector<long long>> s;
        for (const LatticeVector& v : orbit(weight_vector(kA4, std::vector<long>(r)))) {
            std::vector<long long> key(4);
            for (int i = 0; i < 4; ++i)
                key[i] = boost::multiprecision::numerator(v.coords(i).a()).convert_to<long long>();
            s.insert(std::move(key));
        }
        members.push_back(std::move(s));
    }

    std::map<std::vector<long long>, int> histogram;
    for (int vertex = 0; vertex < 32; ++vertex) {
        std::array<int, 5> x;
        for (int i = 0; i < 5; ++i) x[i] = (vertex >> i) & 1;
        std::vector<long long> a(4);
        for (int i = 0; i < 4; ++i) a[i] = x[i] - x[i + 1];
        bool placed = false;
        for (size_t r = 0; r < reps.size(); ++r) {
            if (members[r].count(a)) {
                std::vector<long long> key(reps[r].begin(), reps[r].end());
                ++histogram[key];
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("hypercube_decompose: vertex outside known orbits");
    }
    return histogram;
}

}  // namespace qlat
