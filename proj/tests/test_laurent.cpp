#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl3web/laurent.hpp"

using sl3web::LaurentPoly;

namespace {

LaurentPoly q(int exp) { return LaurentPoly::monomial(1, exp); }

LaurentPoly random_poly(std::mt19937_64& rng) {
    LaurentPoly p;
    const int terms = static_cast<int>(rng() % 6);
    for (int i = 0; i < terms; ++i) {
        const int e = static_cast<int>(rng() % 21) - 10;
        const std::int64_t c = static_cast<std::int64_t>(rng() % 19) - 9;
        p += LaurentPoly::monomial(c, e);
    }
    return p;
}

}  // namespace

TEST_CASE("addition with cancellation") {
    CHECK(q(1) + LaurentPoly::constant(1) + LaurentPoly::constant(-1) == q(1));
    CHECK(LaurentPoly() + q(3) == q(3));
    const LaurentPoly two = LaurentPoly::quantum_int(2);
    CHECK(two + two == LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(2, -1));
}

TEST_CASE("multiplication") {
    const LaurentPoly two = LaurentPoly::quantum_int(2);
    const LaurentPoly three = LaurentPoly::quantum_int(3);
    CHECK(two * two == q(2) + LaurentPoly::constant(2) + q(-2));
    // hand convolution of (q + q^-1)(q^2 + 1 + q^-2)
    CHECK(two * three ==
          q(3) + LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(2, -1) + q(-3));
    const LaurentPoly p = q(5) + LaurentPoly::monomial(-3, 0);
    CHECK(p * LaurentPoly::one() == p);
}

TEST_CASE("quantum integers") {
    CHECK(LaurentPoly::quantum_int(2) == q(1) + q(-1));
    CHECK(LaurentPoly::quantum_int(3) == q(2) + LaurentPoly::constant(1) + q(-2));
    CHECK_THROWS_AS(LaurentPoly::quantum_int(5), std::domain_error);
    CHECK_THROWS_AS(LaurentPoly::quantum_int(0), std::domain_error);
    // [2]^2 = [3] + 1
    CHECK(LaurentPoly::quantum_int(2) * LaurentPoly::quantum_int(2) -
              LaurentPoly::quantum_int(3) ==
          LaurentPoly::one());
}

TEST_CASE("coefficient access") {
    const LaurentPoly three = LaurentPoly::quantum_int(3);
    CHECK(three.coeff(2) == 1);
    CHECK(three.coeff(1) == 0);
    // q^-6 [3]^2 = q^-2 + 2 q^-4 + 3 q^-6 + 2 q^-8 + q^-10
    const LaurentPoly p = q(-6) * three * three;
    CHECK(p.coeff(-6) == 3);
    CHECK(p.coeff(-4) == 2);
    CHECK(p.coeff(-10) == 1);
}

TEST_CASE("substitute q inverse") {
    CHECK((q(2) + LaurentPoly::constant(3)).substitute_q_inverse() ==
          q(-2) + LaurentPoly::constant(3));
    const LaurentPoly three = LaurentPoly::quantum_int(3);
    CHECK(three.substitute_q_inverse() == three);
    CHECK(q(-6).substitute_q_inverse() == q(6));
}

TEST_CASE("ring properties on random polynomials") {
    std::mt19937_64 rng(20240001);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a.substitute_q_inverse().substitute_q_inverse() == a);
        CHECK((a * b).substitute_q_inverse() ==
              a.substitute_q_inverse() * b.substitute_q_inverse());
        CHECK((a + b).substitute_q_inverse() ==
              a.substitute_q_inverse() + b.substitute_q_inverse());
    }
}

TEST_CASE("degree bounds") {
    const LaurentPoly p = q(4) + q(-2);
    CHECK(p.degree() == 4);
    CHECK(p.low_degree() == -2);
    CHECK_THROWS_AS(LaurentPoly().degree(), std::domain_error);
}

TEST_CASE("string rendering") {
    const LaurentPoly three = LaurentPoly::quantum_int(3);
    CHECK((three * three).str() == "q^4 + 2*q^2 + 3 + 2*q^-2 + q^-4");
    CHECK(LaurentPoly().str() == "0");
    CHECK((q(1) - q(-1)).str() == "q - q^-1");
    CHECK(LaurentPoly::monomial(-2, 3).str() == "-2*q^3");
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly p = random_poly(rng);
        CHECK(LaurentPoly::from_json(p.to_json()) == p);
    }
}

TEST_CASE("overflow fails loudly") {
    const LaurentPoly big = LaurentPoly::monomial((1ll << 62), 0);
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big * LaurentPoly::constant(4), std::overflow_error);
}

TEST_CASE("exact division") {
    using sl3web::divide_exact;
    const LaurentPoly z = q(1) - q(-1);
    // (q^3 - q^-3) / (q - q^-1) = q^2 + 1 + q^-2
    CHECK(divide_exact(q(3) - q(-3), z) == LaurentPoly::quantum_int(3));
    CHECK_THROWS_AS(divide_exact(LaurentPoly::one(), z), std::domain_error);
    const LaurentPoly p = LaurentPoly::quantum_int(2) * LaurentPoly::quantum_int(3);
    CHECK(divide_exact(p, LaurentPoly::quantum_int(2)) == LaurentPoly::quantum_int(3));
}
