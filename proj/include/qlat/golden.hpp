#pragma once

// Exact arithmetic in the golden field Q(tau), tau = (1+sqrt(5))/2.
// Values are stored as a + b*tau with arbitrary-precision rational a, b;
// every product is reduced through tau^2 = tau + 1.  Ordering is decided
// exactly (no floating point), which is what makes window-membership tests
// in the strip projection reliable at boundary points.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace qlat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// a + b*tau with rational a, b.  Canonical: equal iff (a,b) equal
/// (cpp_rational keeps lowest terms and a positive denominator).
class GoldenRational {
public:
    GoldenRational() = default;
    GoldenRational(int v) : a_(v) {}  // NOLINT: implicit by design, scalar type
    GoldenRational(long long v) : a_(v) {}
    explicit GoldenRational(Rational a) : a_(std::move(a)) {}
    GoldenRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static GoldenRational tau() { return {0, 1}; }
    static GoldenRational sigma() { return {1, -1}; }          // 1 - tau
    static GoldenRational sqrt5() { return {-1, 2}; }          // 2*tau - 1

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    GoldenRational operator-() const { return {-a_, -b_}; }

    GoldenRational& operator+=(const GoldenRational& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    GoldenRational& operator-=(const GoldenRational& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    // (a1 + b1 t)(a2 + b2 t), t^2 = t + 1
    GoldenRational& operator*=(const GoldenRational& o) {
        Rational a = a_ * o.a_ + b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_ + b_ * o.b_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    GoldenRational& operator/=(const GoldenRational& o) { return *this *= o.inverse(); }

    friend GoldenRational operator+(GoldenRational x, const GoldenRational& y) { return x += y; }
    friend GoldenRational operator-(GoldenRational x, const GoldenRational& y) { return x -= y; }
    friend GoldenRational operator*(GoldenRational x, const GoldenRational& y) { return x *= y; }
    friend GoldenRational operator/(GoldenRational x, const GoldenRational& y) { return x /= y; }

    friend bool operator==(const GoldenRational& x, const GoldenRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const GoldenRational& x, const GoldenRational& y) { return !(x == y); }

    /// Field norm N(a + b tau) = a^2 + ab - b^2; multiplicative, zero iff value is zero.
    Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    /// The field automorphism tau <-> sigma: a + b tau |-> (a+b) - b tau.
    GoldenRational conjugate() const { return {a_ + b_, -b_}; }

    GoldenRational inverse() const {
        Rational n = norm();
        if (n == 0) throw std::domain_error("GoldenRational: division by zero");
        return {(a_ + b_) / n, -b_ / n};
    }

    /// Exact sign of the real embedding a + b*(1+sqrt5)/2.
    int sign() const;

    friend bool operator<(const GoldenRational& x, const GoldenRational& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator>(const GoldenRational& x, const GoldenRational& y) { return y < x; }
    friend bool operator<=(const GoldenRational& x, const GoldenRational& y) { return !(y < x); }
    friend bool operator>=(const GoldenRational& x, const GoldenRational& y) { return !(x < y); }

    /// Nearest double; advisory only, exact operations are authoritative.
    double to_double() const;

    std::string str() const;

private:
    Rational a_ = 0;
    Rational b_ = 0;
};

using Golden = GoldenRational;

int sign(const GoldenRational& x);
GoldenRational abs(const GoldenRational& x);
double to_double(const GoldenRational& x);
GoldenRational golden_conjugate(const GoldenRational& x);
GoldenRational pow(GoldenRational base, int exp);

std::ostream& operator<<(std::ostream& os, const GoldenRational& x);

// JSON form: [a, b], each rational as [numerator, denominator] strings.
void to_json(nlohmann::json& j, const GoldenRational& x);
void from_json(const nlohmann::json& j, GoldenRational& x);

}  // namespace qlat

namespace Eigen {
template <typename T>
struct NumTraits;

template <>
struct NumTraits<qlat::GoldenRational> {
    using Real = qlat::GoldenRational;
    using NonInteger = qlat::GoldenRational;
    using Literal = qlat::GoldenRational;
    using Nested = qlat::GoldenRational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 16,
        MulCost = 32,
    };
    static inline Real epsilon() { return {}; }
    static inline Real dummy_precision() { return {}; }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
