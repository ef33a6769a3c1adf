#include "qlat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qlat {

namespace {

void canonicalize_pair(QuatPair& pair) {
    // [p,q] and [-p,-q] are the same action; fix the sign of the first
    // nonzero component of p.
    for (int i = 0; i < 4; ++i) {
        int s = pair.p[i].sign();
        if (s == 0) continue;
        if (s < 0) {
            pair.p = -pair.p;
            pair.q = -pair.q;
        }
        return;
    }
}

GoldenQuaternion pair_apply(const QuatPair& pr, const GoldenQuaternion& lambda) {
    GoldenQuaternion v = apply_element(pr.p, pr.q, pr.kind, lambda);
    if (pr.sqrt2_power == 1) {
        // true pair components carry 1/sqrt2 each; the sandwich rationalizes
        Golden half(Rational(1, 2));
        v = half * v;
    }
    return v;
}

std::string weight_key(const Eigen::MatrixXi& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) os << m(i, j) << ",";
    return os.str();
}

Eigen::MatrixXi simple_reflection_weight_matrix(const Diagram& d, int i) {
    const int n = d.rank;
    CartanPair c = cartan_matrix(d);
    Eigen::MatrixXi s = Eigen::MatrixXi::Identity(n, n);
    for (int j = 0; j < n; ++j) {
        // a'_j = a_j - C_ij a_i
        long long cij = boost::multiprecision::numerator(c.matrix(i, j).a()).convert_to<long long>();
        s(j, i) -= static_cast<int>(cij);
    }
    return s;
}

Mat4G matrix_from_action(const std::function<GoldenQuaternion(const GoldenQuaternion&)>& act) {
    Mat4G m;
    for (int j = 0; j < 4; ++j) {
        GoldenQuaternion col = act(GoldenQuaternion::unit(j));
        for (int i = 0; i < 4; ++i) m(i, j) = col[i];
    }
    return m;
}

}  // namespace

GoldenQuaternion WeylElement::apply(const GoldenQuaternion& lambda) const {
    GoldenQuaternion out;
    for (int i = 0; i < 4; ++i) {
        GoldenQuaternion col;
        for (int j = 0; j < 4; ++j) col[j] = matrix(j, i);
        out += lambda[i] * col;
    }
    return out;
}

WeylElement compose(const WeylElement& outer, const WeylElement& inner) {
    WeylElement e;
    e.matrix = outer.matrix * inner.matrix;
    e.weight_action = outer.weight_action * inner.weight_action;
    if (outer.pair && inner.pair) {
        const QuatPair& o = *outer.pair;
        const QuatPair& in = *inner.pair;
        QuatPair np;
        if (o.kind == ActionKind::plain) {
            np.p = o.p * in.p;
            np.q = in.q * o.q;
            np.kind = in.kind;
        } else {
            np.p = o.p * in.q.conjugate();
            np.q = in.p.conjugate() * o.q;
            np.kind = in.kind == ActionKind::plain ? ActionKind::star : ActionKind::plain;
        }
        int k = o.sqrt2_power + in.sqrt2_power;
        if (k == 2) {
            Golden half(Rational(1, 2));
            np.p = half * np.p;
            np.q = half * np.q;
            k = 0;
        }
        np.sqrt2_power = k;
        canonicalize_pair(np);
        e.pair = std::move(np);
    }
    return e;
}

WeylElement simple_reflection_element(const Diagram& d, int i) {
    GoldenQuaternion alpha = simple_root_quaternion(d, i);
    WeylElement e;
    e.matrix = matrix_from_action(
        [&](const GoldenQuaternion& l) { return reflect_through_root(alpha, l); });
    e.weight_action = simple_reflection_weight_matrix(d, i);
    QuatPair pr;
    if (d == kA3) {
        pr = QuatPair{alpha, -alpha, ActionKind::star, 1};
    } else {
        Golden half(Rational(1, 2));
        pr = QuatPair{half * alpha, -(half * alpha), ActionKind::star, 0};
    }
    canonicalize_pair(pr);
    e.pair = std::move(pr);
    return e;
}

WeylElement diagram_symmetry_element(const Diagram& d) {
    if (d == kA3) {
        WeylElement e;
        QuatPair pr{GoldenQuaternion::unit(1), -GoldenQuaternion::unit(1), ActionKind::star, 0};
        e.matrix = matrix_from_action(
            [&](const GoldenQuaternion& l) { return pair_apply(pr, l); });
        Eigen::MatrixXi w(3, 3);
        w << 0, 0, 1, 0, 1, 0, 1, 0, 0;
        e.weight_action = w;
        canonicalize_pair(pr);
        e.pair = std::move(pr);
        return e;
    }
    if (d == kA4) {
        // Solve the quaternion matrix from alpha_i -> alpha_{5-i}.
        MatG roots(4, 4), swapped(4, 4);
        for (int j = 0; j < 4; ++j) {
            GoldenQuaternion a = simple_root_quaternion(d, j);
            GoldenQuaternion b = simple_root_quaternion(d, 3 - j);
            for (int i = 0; i < 4; ++i) {
                roots(i, j) = a[i];
                swapped(i, j) = b[i];
            }
        }
        MatG m = swapped * inverse_exact(roots);
        WeylElement e;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) e.matrix(i, j) = m(i, j);
        Eigen::MatrixXi w = Eigen::MatrixXi::Zero(4, 4);
        for (int i = 0; i < 4; ++i) w(i, 3 - i) = 1;
        e.weight_action = w;
        return e;
    }
    throw std::invalid_argument("diagram_symmetry_element: A_3 or A_4 only");
}

std::vector<WeylElement> generate_group(GroupName which) {
    std::vector<WeylElement> gens;
    switch (which) {
        case GroupName::W_A3:
        case GroupName::Aut_A3:
            for (int i = 0; i < 3; ++i) gens.push_back(simple_reflection_element(kA3, i));
            if (which == GroupName::Aut_A3) gens.push_back(diagram_symmetry_element(kA3));
            break;
        case GroupName::W_A4:
        case GroupName::Aut_A4:
            for (int i = 0; i < 4; ++i) gens.push_back(simple_reflection_element(kA4, i));
            if (which == GroupName::Aut_A4) gens.push_back(diagram_symmetry_element(kA4));
            break;
        case GroupName::W_H2: {
            auto r = [&](int i) { return simple_reflection_element(kA4, i); };
            gens.push_back(compose(r(0), r(2)));
            gens.push_back(compose(r(1), r(3)));
            break;
        }
    }
    const int n = gens.front().weight_action.rows();
    WeylElement identity;
    identity.matrix = Mat4G::Zero();
    for (int i = 0; i < 4; ++i) identity.matrix(i, i) = 1;
    identity.weight_action = Eigen::MatrixXi::Identity(n, n);
    identity.pair = QuatPair{GoldenQuaternion::one(), GoldenQuaternion::one(), ActionKind::plain, 0};

    std::vector<WeylElement> elements;
    std::set<std::string> seen;
    std::deque<int> queue;
    elements.push_back(identity);
    seen.insert(weight_key(identity.weight_action));
    queue.push_back(0);
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        for (const WeylElement& g : gens) {
            WeylElement next = compose(g, elements[idx]);
            std::string key = weight_key(next.weight_action);
            if (seen.insert(key).second) {
                elements.push_back(std::move(next));
                queue.push_back(static_cast<int>(elements.size()) - 1);
            }
        }
    }
    return elements;
}

std::vector<LatticeVector> orbit(const LatticeVector& highest_weight) {
    if (highest_weight.basis != Basis::weight)
        throw std::invalid_argument("orbit: highest weight must be in the weight basis");
    const Diagram d = highest_weight.diagram;
    const int n = d.rank;
    std::vector<long long> start(n);
    for (int i = 0; i < n; ++i) {
        const Golden& c = highest_weight.coords(i);
        if (!c.is_rational() || boost::multiprecision::denominator(c.a()) != 1)
            throw std::invalid_argument("orbit: integer weight coordinates required");
        start[i] = boost::multiprecision::numerator(c.a()).convert_to<long long>();
        if (start[i] < 0) throw std::invalid_argument("orbit: not a highest weight (a_i < 0)");
    }
    CartanPair cp = cartan_matrix(d);
    std::vector<std::vector<long long>> cart(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cart[i][j] = boost::multiprecision::numerator(cp.matrix(i, j).a()).convert_to<long long>();

    std::set<std::vector<long long>> seen{start};
    std::deque<std::vector<long long>> queue{start};
    while (!queue.empty()) {
        std::vector<long long> a = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            if (a[i] == 0) continue;  // reflection fixes the vector
            std::vector<long long> b = a;
            for (int j = 0; j < n; ++j) b[j] -= a[i] * cart[i][j];
            if (seen.insert(b).second) queue.push_back(b);
        }
    }
    std::vector<LatticeVector> out;
    out.reserve(seen.size());
    for (const auto& a : seen) {
        VecG v(n);
        for (int i = 0; i < n; ++i) v(i) = Golden(a[i]);
        out.push_back(LatticeVector{d, Basis::weight, std::move(v)});
    }
    return out;  // std::set iteration gives deterministic lexicographic order
}

std::vector<Eigen::Matrix4i> symbolic_orbit() {
    CartanPair cp = cartan_matrix(kA4);
    std::array<Eigen::Matrix4i, 4> refl;
    for (int i = 0; i < 4; ++i) {
        refl[i] = Eigen::Matrix4i::Identity();
        for (int j = 0; j < 4; ++j)
            refl[i](j, i) -=
                boost::multiprecision::numerator(cp.matrix(i, j).a()).convert_to<int>();
    }
    auto key = [](const Eigen::Matrix4i& m) {
        std::array<int, 16> k;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) k[i * 4 + j] = m(i, j);
        return k;
    };
    std::map<std::array<int, 16>, Eigen::Matrix4i> seen;
    std::deque<Eigen::Matrix4i> queue{Eigen::Matrix4i::Identity()};
    seen.emplace(key(queue.front()), queue.front());
    while (!queue.empty()) {
        Eigen::Matrix4i m = queue.front();
        queue.pop_front();
        for (int i = 0; i < 4; ++i) {
            Eigen::Matrix4i next = refl[i] * m;
            if (seen.emplace(key(next), next).second) queue.push_back(next);
        }
    }
    std::vector<Eigen::Matrix4i> out;
    out.reserve(seen.size());
    for (const auto& [k, m] : seen) out.push_back(m);
    return out;
}

std::vector<LatticeVector> voronoi_vertices(VoronoiLattice lattice) {
    auto orbit_of = [](const Diagram& d, std::vector<long> w) {
        return orbit(weight_vector(d, std::move(w)));
    };
    std::vector<LatticeVector> out;
    auto append = [&](std::vector<LatticeVector> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    switch (lattice) {
        case VoronoiLattice::A3_root:
            append(orbit_of(kA3, {1, 0, 0}));
            append(orbit_of(kA3, {0, 1, 0}));
            append(orbit_of(kA3, {0, 0, 1}));
            break;
        case VoronoiLattice::A3_weight:
            append(orbit_of(kA3, {1, 1, 1}));
            break;
        case VoronoiLattice::A4_root:
            append(orbit_of(kA4, {1, 0, 0, 0}));
            append(orbit_of(kA4, {0, 1, 0, 0}));
            append(orbit_of(kA4, {0, 0, 1, 0}));
            append(orbit_of(kA4, {0, 0, 0, 1}));
            break;
        case VoronoiLattice::A4_weight:
            append(orbit_of(kA4, {1, 1, 1, 1}));
            break;
    }
    return out;
}

static std::vector<LatticeVector> scaled_orbit(const Diagram& d, std::vector<long> w,
                                               const Rational& scale) {
    std::vector<LatticeVector> pts = orbit(weight_vector(d, std::move(w)));
    if (scale != 1) {
        Golden s{scale};
        for (LatticeVector& p : pts)
            for (int i = 0; i < p.coords.rows(); ++i) p.coords(i) *= s;
    }
    return pts;
}

std::vector<LatticeVector> dual_vertices(DualPolytope polytope) {
    std::vector<LatticeVector> out;
    auto append = [&](std::vector<LatticeVector> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    switch (polytope) {
        case DualPolytope::A4_weight_voronoi:
            append(scaled_orbit(kA4, {1, 0, 0, 0}, 1));
            append(scaled_orbit(kA4, {0, 1, 0, 0}, Rational(2, 3)));
            append(scaled_orbit(kA4, {0, 0, 1, 0}, Rational(2, 3)));
            append(scaled_orbit(kA4, {0, 0, 0, 1}, 1));
            break;
        case DualPolytope::A3_truncated_octahedron:
            append(scaled_orbit(kA3, {1, 0, 0}, 1));
            append(scaled_orbit(kA3, {0, 1, 0}, Rational(3, 4)));
            append(scaled_orbit(kA3, {0, 0, 1}, 1));
            break;
        case DualPolytope::A4_0110:
            append(scaled_orbit(kA4, {1, 0, 0, 0}, 1));
            append(scaled_orbit(kA4, {0, 0, 0, 1}, 1));
            break;
    }
    return out;
}

LatticeVector highest_root(const Diagram& d) {
    if (d == kA3) return weight_vector(d, {1, 0, 1});
    if (d == kA4) return weight_vector(d, {1, 0, 0, 1});
    throw std::invalid_argument("highest_root: A_3 or A_4 only");
}

LatticeVector affine_translate(const LatticeVector& v) {
    LatticeVector h = convert_basis(highest_root(v.diagram), v.basis);
    LatticeVector out = v;
    out.coords += h.coords;
    return out;
}

std::vector<GoldenQuaternion> binary_tetrahedral_set() {
    std::vector<GoldenQuaternion> t;
    for (int i = 0; i < 4; ++i) {
        GoldenQuaternion u = GoldenQuaternion::unit(i);
        t.push_back(u);
        t.push_back(-u);
    }
    Golden half(Rational(1, 2));
    for (int s = 0; s < 16; ++s) {
        GoldenQuaternion q;
        for (int i = 0; i < 4; ++i) q[i] = (s >> i) & 1 ? -half : half;
        t.push_back(q);
    }
    return t;
}

std::vector<GoldenQuaternion> scaled_t_prime_set() {
    std::vector<GoldenQuaternion> t;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si = 0; si < 2; ++si)
                for (int sj = 0; sj < 2; ++sj) {
                    GoldenQuaternion q;
                    q[i] = si ? -1 : 1;
                    q[j] = sj ? -1 : 1;
                    t.push_back(q);
                }
    return t;
}

}  // namespace qlat
