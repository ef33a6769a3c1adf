#include "qlat/golden.hpp"

#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace qlat {

int GoldenRational::sign() const {
    // value = (u + v*sqrt5)/2 with u = 2a + b, v = b
    Rational u = 2 * a_ + b_;
    const Rational& v = b_;
    int su = u.sign();
    int sv = v.sign();
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // opposite signs: compare u^2 against 5 v^2 (sqrt5 is irrational, so
    // equality can only happen at zero, excluded above)
    Rational cmp = u * u - 5 * v * v;
    return su > 0 ? cmp.sign() : -cmp.sign();
}

double GoldenRational::to_double() const {
    static const double kTau = 1.6180339887498948482;
    return a_.convert_to<double>() + b_.convert_to<double>() * kTau;
}

std::string GoldenRational::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

int sign(const GoldenRational& x) { return x.sign(); }

GoldenRational abs(const GoldenRational& x) { return x.sign() < 0 ? -x : x; }

double to_double(const GoldenRational& x) { return x.to_double(); }

GoldenRational golden_conjugate(const GoldenRational& x) { return x.conjugate(); }

GoldenRational pow(GoldenRational base, int exp) {
    if (exp < 0) {
        base = base.inverse();
        exp = -exp;
    }
    GoldenRational result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const GoldenRational& x) {
    if (x.b() == 0) return os << x.a();
    if (x.a() == 0) return os << x.b() << "t";
    os << x.a();
    if (x.b() > 0) os << "+";
    return os << x.b() << "t";
}

static nlohmann::json rational_to_json(const Rational& r) {
    return nlohmann::json::array(
        {boost::multiprecision::numerator(r).str(), boost::multiprecision::denominator(r).str()});
}

static Rational rational_from_json(const nlohmann::json& j) {
    BigInt num(j.at(0).get<std::string>());
    BigInt den(j.at(1).get<std::string>());
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num, den);
}

void to_json(nlohmann::json& j, const GoldenRational& x) {
    j = nlohmann::json::array({rational_to_json(x.a()), rational_to_json(x.b())});
}

void from_json(const nlohmann::json& j, GoldenRational& x) {
    x = GoldenRational(rational_from_json(j.at(0)), rational_from_json(j.at(1)));
}

}  // namespace qlat
