#include <doctest.h>

#include <fstream>

#include "craut/model.hpp"

using namespace craut;

namespace {

std::string models_dir() { return CRAUT_MODELS_DIR; }

}  // namespace

TEST_CASE("xi expansion tabulates the first model exactly") {
    ModelSpec m = paper_model(1);
    XiTable xi = xi_expand(m);
    CHECK(xi.coeff(0, {1}, {1}) == GaussRat::parse("2*i"));
    CHECK(xi.coeff(2, {1}, {2}) == GaussRat(2));
    CHECK(xi.coeff(2, {2}, {1}) == GaussRat(-2));
    for (size_t j = 0; j < 8; ++j) CHECK(xi.coeff(j, {0}, {0}).is_zero());
    CHECK(xi.max_z_degree() == 4);
    CHECK(xi.max_zbar_degree() == 4);
    CHECK(model_weights(m) == std::vector<unsigned>{2, 3, 3, 4, 4, 4, 5, 5});
}

TEST_CASE("model validation catches broken defining functions") {
    ModelSpec m;
    m.n = 1;
    m.k = 1;
    m.xi = {parse_xi_dsl("2*i*z*zb + 1", 1)};
    auto errs = validate_model(m);
    CHECK(errs.size() >= 2);  // constant term + reality

    m.xi = {parse_xi_dsl("z*zb", 1)};  // real coefficient breaks reality
    CHECK_FALSE(validate_model(m).empty());
    CHECK_THROWS_AS(xi_expand(m), std::invalid_argument);

    m.xi = {parse_xi_dsl("2*i*z*zb", 1)};
    CHECK(validate_model(m).empty());

    // Mixed reality: z^2 zb - z zb^2 pairs correctly with a real coefficient.
    m.xi = {parse_xi_dsl("2*z^2*zb - 2*z*zb^2", 1)};
    CHECK(validate_model(m).empty());

    m.xi = {parse_xi_dsl("2*i*z", 1)};  // linear term
    CHECK_FALSE(validate_model(m).empty());

    m.k = 2;
    m.xi = {parse_xi_dsl("2*i*z*zb", 1)};
    CHECK_FALSE(validate_model(m).empty());  // equation count
}

TEST_CASE("the shipped model fixtures parse and validate") {
    for (const char* name : {"m1.json", "m2.json", "m3.json", "heisenberg.json"}) {
        ModelSpec m = load_model_file(models_dir() + "/" + name);
        CHECK(validate_model(m).empty());
    }
    ModelSpec m1 = load_model_file(models_dir() + "/m1.json");
    CHECK(m1.xi == paper_model(1).xi);
    CHECK(load_model_file(models_dir() + "/m2.json").xi == paper_model(2).xi);
    CHECK(load_model_file(models_dir() + "/m3.json").xi == paper_model(3).xi);
}

TEST_CASE("term-list JSON form and DSL form agree") {
    ModelSpec a = parse_model_json(R"({
      "n": 1, "k": 1,
      "xi": [[{"re":"0","im":"2","zbar":[1],"z":[1]}]]
    })");
    ModelSpec b = parse_model_json(R"({"n":1,"k":1,"xi":["2*i*z*zb"]})");
    CHECK(a.xi == b.xi);
    // Round trip through the rendered JSON.
    ModelSpec c = parse_model_json(render_model_json(b));
    CHECK(c.xi == b.xi);
}

TEST_CASE("xi DSL handles indices, powers, and signs") {
    MPoly p = parse_xi_dsl("2*i*z1*zb2^3 - 1/2*z2^2*zb1", 2);
    // Variables are ordered [zb1, zb2, z1, z2].
    CHECK(p.coeff({0, 3, 1, 0}) == GaussRat::parse("2*i"));
    CHECK(p.coeff({1, 0, 0, 2}) == GaussRat::parse("-1/2"));
    CHECK_THROWS_AS(parse_xi_dsl("z3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_xi_dsl("2**z", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_xi_dsl("", 1), std::invalid_argument);
}
