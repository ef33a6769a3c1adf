#pragma once

// Quaternion algebra over Q(tau): Hamilton product, the division-free
// reflection sandwich -alpha conj(lambda) alpha / (alpha,alpha), and the
// two-sided group actions [p,q] (lambda -> p lambda q) and
// [p,q]* (lambda -> p conj(lambda) q).

#include <array>
#include <stdexcept>

#include <nlohmann/json_fwd.hpp>

#include "qlat/golden.hpp"

namespace qlat {

enum class ActionKind { plain, star };

/// Quaternion q0 + q1 e1 + q2 e2 + q3 e3 with GoldenRational components.
class GoldenQuaternion {
public:
    GoldenQuaternion() = default;
    GoldenQuaternion(Golden q0, Golden q1, Golden q2, Golden q3)
        : c_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}

    static GoldenQuaternion one() { return {1, 0, 0, 0}; }
    static GoldenQuaternion unit(int i) {
        GoldenQuaternion q;
        q.c_[i] = 1;
        return q;
    }

    const Golden& operator[](int i) const { return c_[i]; }
    Golden& operator[](int i) { return c_[i]; }

    bool is_zero() const;

    GoldenQuaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    GoldenQuaternion& operator+=(const GoldenQuaternion& o);
    GoldenQuaternion& operator-=(const GoldenQuaternion& o);
    friend GoldenQuaternion operator+(GoldenQuaternion x, const GoldenQuaternion& y) {
        return x += y;
    }
    friend GoldenQuaternion operator-(GoldenQuaternion x, const GoldenQuaternion& y) {
        return x -= y;
    }
    friend GoldenQuaternion operator*(const GoldenQuaternion& p, const GoldenQuaternion& q);
    friend GoldenQuaternion operator*(const Golden& s, const GoldenQuaternion& q);

    friend bool operator==(const GoldenQuaternion& x, const GoldenQuaternion& y) {
        return x.c_ == y.c_;
    }
    friend bool operator!=(const GoldenQuaternion& x, const GoldenQuaternion& y) {
        return !(x == y);
    }

    /// Quaternion conjugate q0 - q1 e1 - q2 e2 - q3 e3.
    GoldenQuaternion conjugate() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

private:
    std::array<Golden, 4> c_{};
};

using Quat = GoldenQuaternion;

GoldenQuaternion quat_multiply(const GoldenQuaternion& p, const GoldenQuaternion& q);

/// (p,q) = (conj(p) q + conj(q) p)/2 = sum p_i q_i.
Golden quat_scalar_product(const GoldenQuaternion& p, const GoldenQuaternion& q);

/// Reflection in the hyperplane orthogonal to alpha:
/// -alpha conj(lambda) alpha / (alpha, alpha).  Scale-invariant in alpha,
/// so stored (unnormalized) roots can be used directly.
GoldenQuaternion reflect_through_root(const GoldenQuaternion& alpha,
                                      const GoldenQuaternion& lambda);

GoldenQuaternion apply_element(const GoldenQuaternion& p, const GoldenQuaternion& q,
                               ActionKind kind, const GoldenQuaternion& lambda);

/// Componentwise tau <-> sigma.
GoldenQuaternion golden_conjugate_quat(const GoldenQuaternion& p);

void to_json(nlohmann::json& j, const GoldenQuaternion& q);
void from_json(const nlohmann::json& j, GoldenQuaternion& q);

}  // namespace qlat
