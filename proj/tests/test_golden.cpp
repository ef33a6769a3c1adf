#include "doctest.h"

#include <cmath>
#include <nlohmann/json.hpp>
#include <random>

#include "qlat/golden.hpp"

using namespace qlat;

namespace {

const Golden t = Golden::tau();

Golden random_golden(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 9);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

const double kTauD = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST_CASE("multiplication reduces through tau^2 = tau + 1") {
    CHECK(t * t == Golden(1) + t);
    Golden x{Rational(3, 7), Rational(-2, 5)};
    CHECK(Golden(1) * x == x);
    Golden sqrt5 = Golden(-1) + Golden(2) * t;
    CHECK(sqrt5 * sqrt5 == Golden(5));
}

TEST_CASE("inverse via the field norm") {
    CHECK(t.inverse() == Golden(-1) + t);  // tau(tau-1) = 1
    CHECK(Golden(1).inverse() == Golden(1));
    CHECK_THROWS_AS(Golden(0).inverse(), std::domain_error);
    CHECK(t * t.inverse() == Golden(1));
}

TEST_CASE("golden conjugation swaps tau and sigma") {
    CHECK(t.conjugate() == Golden(1) - t);
    Golden sqrt5 = Golden(-1) + Golden(2) * t;
    CHECK(sqrt5.conjugate() == -sqrt5);
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        Golden x = random_golden(rng);
        CHECK(x.conjugate().conjugate() == x);
        // float oracle: conjugation flips the sign of the sqrt5 part
        double expect = x.a().convert_to<double>() + x.b().convert_to<double>() * (1.0 - kTauD);
        CHECK(x.conjugate().to_double() == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("exact sign of the real embedding") {
    CHECK((Golden(-1) + Golden(2) * t).sign() == 1);   // sqrt5
    CHECK((Golden(1) - t).sign() == -1);               // sigma
    CHECK((Golden(3) - Golden(2) * t).sign() == -1);   // 3 - 2 tau < 0
    CHECK(Golden(0).sign() == 0);
    // near-zero values where naive doubles would be shaky: F(17)-F(16)tau
    Golden tiny = Golden(1597) - Golden(987) * t;
    CHECK(tiny.sign() == 1);
    CHECK((-tiny).sign() == -1);
}

TEST_CASE("to_double") {
    CHECK(t.to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-15));
    CHECK(Golden(0).to_double() == 0.0);
    CHECK((Golden(2) - t).to_double() == doctest::Approx(0.3819660112501051).epsilon(1e-15));
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 10000; ++i) {
        Golden x = random_golden(rng), y = random_golden(rng), z = random_golden(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == Golden(1));
    }
}

TEST_CASE("conjugation is a ring homomorphism, norm is multiplicative") {
    std::mt19937 rng(99);
    for (int i = 0; i < 2000; ++i) {
        Golden x = random_golden(rng), y = random_golden(rng);
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("sign agrees with float evaluation away from zero") {
    std::mt19937 rng(55);
    for (int i = 0; i < 10000; ++i) {
        Golden x = random_golden(rng);
        double f = x.to_double();
        if (std::fabs(f) > 1e-6) CHECK(x.sign() == (f > 0 ? 1 : -1));
    }
}

TEST_CASE("json round trip as [a, b] rational string pairs") {
    Golden x{Rational(-7, 3), Rational(22, 5)};
    nlohmann::json j = x;
    CHECK(j[0][0] == "-7");
    CHECK(j[0][1] == "3");
    Golden back = j.get<Golden>();
    CHECK(back == x);
}

TEST_CASE("exact ordering") {
    CHECK(Golden(1) < t);
    CHECK(t < Golden(2));
    CHECK(Golden::sigma() < Golden(0));
    CHECK(qlat::abs(Golden::sigma()) == t - Golden(1));
}
