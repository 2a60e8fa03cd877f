#include <doctest.h>

#include "craut/ranking.hpp"
#include "craut/textio.hpp"
#include "support/rings.hpp"

using namespace craut;
using namespace craut::testing;

TEST_CASE("orderly ranking: order dominates, then block, then exponent lex") {
    RingPtr ring = real_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});

    // u_x vs v_xy: lower order loses.
    CHECK(r.compare(D(ring, "u", {1, 0}), D(ring, "v", {1, 1})) < 0);
    // delta v > v.
    CHECK(r.compare(D(ring, "v", {0, 1}), D(ring, "v", {0, 0})) > 0);
    // u_yy vs v_xx: same order, u block ranks higher.
    CHECK(r.compare(D(ring, "u", {0, 2}), D(ring, "v", {2, 0})) > 0);
    // u_xx vs u_xy: exponent lex with x most significant.
    CHECK(r.compare(D(ring, "u", {2, 0}), D(ring, "u", {1, 1})) > 0);
    CHECK(r.compare(D(ring, "u", {1, 1}), D(ring, "u", {1, 1})) == 0);
}

TEST_CASE("elimination ranking puts the block first") {
    RingPtr ring = real_uv();
    Ranking r(ring, RankingKind::elimination, {"u", "v"});
    // Any u-derivative beats any v-derivative.
    CHECK(r.compare(D(ring, "u", {0, 0}), D(ring, "v", {3, 3})) > 0);
    CHECK(r.compare(D(ring, "v", {0, 1}), D(ring, "v", {0, 0})) > 0);
}

TEST_CASE("barred partner ranks immediately below unbarred") {
    RingPtr ring = tagged_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});
    CHECK(r.compare(D(ring, "u", {1, 0}), D(ring, "bar(u)", {1, 0})) > 0);
    CHECK(r.compare(D(ring, "bar(u)", {1, 0}), D(ring, "v", {1, 0})) > 0);
    // Compatibility: v > w implies delta v > delta w.
    Derivative a = D(ring, "u", {1, 0});
    Derivative b = D(ring, "bar(u)", {1, 0});
    CHECK(r.compare(Derivative{a.indet, a.op.times(DerivOp({0, 2}))},
                    Derivative{b.indet, b.op.times(DerivOp({0, 2}))}) > 0);
}

TEST_CASE("mismatched ring signatures are rejected") {
    RingPtr a = real_uv();
    auto b = std::make_shared<DiffRing>();
    b->add_derivation("x");
    b->add_real_unknown("u");
    Ranking r(a, RankingKind::orderly, {"u", "v"});
    CHECK_THROWS_AS(r.compare(Derivative{0, DerivOp({1, 0})}, Derivative{0, DerivOp({1})}),
                    std::invalid_argument);
    LinDiffPoly p = LinDiffPoly::term(b, Derivative{0, DerivOp({1})}, GaussRat::one());
    CHECK_THROWS_AS(p.leader(r), std::invalid_argument);
}

TEST_CASE("leader, lcd, derive, bar") {
    RingPtr ring = real_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});

    CHECK(P(ring, "u[0,2] - v[2,0] - v[1,1]").leader(r) == D(ring, "u", {0, 2}));
    CHECK(P(ring, "v[0,2] - v[0,0]").leader(r) == D(ring, "v", {0, 2}));
    CHECK(P(ring, "3*u").leader(r) == D(ring, "u", {0, 0}));
    CHECK_THROWS_AS(P(ring, "1/2").leader(r), std::domain_error);

    CHECK(lcd(D(ring, "u", {2, 0}), D(ring, "u", {0, 2})) == D(ring, "u", {2, 2}));
    CHECK_FALSE(has_lcd(D(ring, "u", {1, 0}), D(ring, "v", {1, 0})));
    CHECK(lcd(D(ring, "u", {1, 0}), D(ring, "u", {1, 0})) == D(ring, "u", {1, 0}));

    CHECK(P(ring, "u[2,0] - u[1,1]").derived(DerivOp({0, 1})) == P(ring, "u[2,1] - u[1,2]"));
    CHECK(P(ring, "u[2,0] - u[1,1]").derived(DerivOp({0, 0})) == P(ring, "u[2,0] - u[1,1]"));
    CHECK(P(ring, "5").derived(DerivOp({1, 0})).is_zero());
}

TEST_CASE("bar is an involution commuting with derivations") {
    RingPtr ring = tagged_uv();
    LinDiffPoly p = P(ring, "u[1,0] - i*v");
    CHECK(p.barred() == P(ring, "bar(u)[1,0] + i*bar(v)"));
    CHECK(p.barred().barred() == p);
    DerivOp dy({0, 1});
    CHECK(p.derived(dy).barred() == p.barred().derived(dy));

    RingPtr real = real_uv();
    LinDiffPoly q = P(real, "u[1,1] + 2*v");
    CHECK(q.barred() == q);
}

TEST_CASE("poly text form round trips") {
    RingPtr ring = tagged_uv();
    for (const char* s :
         {"u[2,1]", "bar(u)[0,1]", "u[2,0] - u[1,1]", "-2*i*u - bar(v)",
          "(1/2+3/4*i)*u[1,2] + v - 2", "0", "3/4", "i*v[1,1] - i*bar(v)[1,1]"}) {
        LinDiffPoly p = P(ring, s);
        CHECK(P(ring, render_poly(p)) == p);
    }
    CHECK(render_poly(P(ring, "u[0,0]")) == "u");
    CHECK(render_poly(P(ring, "+u[2,1]")) == "u[2,1]");
    CHECK_THROWS_AS(P(ring, "u[1]"), std::invalid_argument);
    CHECK_THROWS_AS(P(ring, "w[1,0]"), std::invalid_argument);
    CHECK_THROWS_AS(P(ring, "u*v"), std::invalid_argument);
}
