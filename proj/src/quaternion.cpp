#include "qlat/quaternion.hpp"

#include <nlohmann/json.hpp>

namespace qlat {

bool GoldenQuaternion::is_zero() const {
    for (int i = 0; i < 4; ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

GoldenQuaternion& GoldenQuaternion::operator+=(const GoldenQuaternion& o) {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

GoldenQuaternion& GoldenQuaternion::operator-=(const GoldenQuaternion& o) {
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

GoldenQuaternion operator*(const GoldenQuaternion& p, const GoldenQuaternion& q) {
    // e_i e_j = -delta_ij + eps_ijk e_k
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

GoldenQuaternion operator*(const Golden& s, const GoldenQuaternion& q) {
    return {s * q[0], s * q[1], s * q[2], s * q[3]};
}

GoldenQuaternion quat_multiply(const GoldenQuaternion& p, const GoldenQuaternion& q) {
    return p * q;
}

Golden quat_scalar_product(const GoldenQuaternion& p, const GoldenQuaternion& q) {
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
}

GoldenQuaternion reflect_through_root(const GoldenQuaternion& alpha,
                                      const GoldenQuaternion& lambda) {
    if (alpha.is_zero()) throw std::domain_error("reflect_through_root: zero root");
    Golden inv_norm = quat_scalar_product(alpha, alpha).inverse();
    GoldenQuaternion r = alpha * lambda.conjugate() * alpha;
    return (-inv_norm) * r;
}

GoldenQuaternion apply_element(const GoldenQuaternion& p, const GoldenQuaternion& q,
                               ActionKind kind, const GoldenQuaternion& lambda) {
    return kind == ActionKind::plain ? p * lambda * q : p * lambda.conjugate() * q;
}

GoldenQuaternion golden_conjugate_quat(const GoldenQuaternion& p) {
    return {p[0].conjugate(), p[1].conjugate(), p[2].conjugate(), p[3].conjugate()};
}

void to_json(nlohmann::json& j, const GoldenQuaternion& q) {
    j = nlohmann::json::array({q[0], q[1], q[2], q[3]});
}

void from_json(const nlohmann::json& j, GoldenQuaternion& q) {
    for (int i = 0; i < 4; ++i) j.at(i).get_to(q[i]);
}

}  // namespace qlat
