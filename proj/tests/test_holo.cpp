#include <doctest.h>

#include "craut/holo.hpp"

using namespace craut;

namespace {

HoloVectorField F(const std::string& s, size_t n = 1, size_t k = 8) {
    return parse_field(s, n, k);
}

}  // namespace

TEST_CASE("field text form round trips") {
    for (const char* s :
         {"d/dw1", "z*d/dz + 2*w1*d/dw1", "(4*w1+2*i*z^2)*d/dw2 + 2*z^2*d/dw3",
          "i*d/dz + (-3*w3+2*z^3)*d/dw4", "-2*w5*d/dw4 + 2*w4*d/dw5", "0",
          "(3*w2-2*i*z^3)*d/dw5 - 3*w8*d/dw7"}) {
        HoloVectorField X = F(s);
        CHECK(parse_field(render_field(X), 1, 8) == X);
    }
    CHECK(render_field(F("d/dw1")) == "d/dw1");
    CHECK_THROWS_AS(F("z*d/dq"), std::invalid_argument);
    CHECK_THROWS_AS(F("w9*d/dz"), std::invalid_argument);
}

TEST_CASE("bracket is antisymmetric, bilinear, and satisfies Jacobi") {
    HoloVectorField a = F("z*d/dz + 2*w1*d/dw1");
    HoloVectorField b = F("(4*w1+2*i*z^2)*d/dw2 + 2*z^2*d/dw3 + d/dz");
    HoloVectorField c = F("w2*d/dw3 - 2*w5*d/dw4 + i*z*d/dz");

    CHECK(bracket(a, a).is_zero());
    CHECK(bracket(a, b) == -bracket(b, a));

    HoloVectorField jacobi = bracket(a, bracket(b, c));
    jacobi += bracket(b, bracket(c, a));
    jacobi += bracket(c, bracket(a, b));
    CHECK(jacobi.is_zero());

    HoloVectorField lin = bracket(a + b.scaled(GaussRat(3)), c);
    HoloVectorField rhs = bracket(a, c) + bracket(b, c).scaled(GaussRat(3));
    CHECK(lin == rhs);
}

TEST_CASE("bracket signature mismatch is rejected") {
    HoloVectorField a = F("d/dw1", 1, 8);
    HoloVectorField b = parse_field("d/dw1", 1, 1);
    CHECK_THROWS_AS(bracket(a, b), std::invalid_argument);
}

TEST_CASE("hand-checked brackets on coordinate fields") {
    // [d/dw1, (4 w1) d/dw2] = 4 d/dw2.
    CHECK(bracket(F("d/dw1"), F("4*w1*d/dw2")) == F("4*d/dw2"));
    // [z d/dz, d/dz] = -d/dz.
    CHECK(bracket(F("z*d/dz"), F("d/dz")) == F("-d/dz"));
    // Abelian pair.
    CHECK(bracket(F("d/dw1"), F("d/dw2")).is_zero());
}
