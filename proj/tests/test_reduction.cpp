#include <doctest.h>

#include "craut/reduction.hpp"
#include "support/rings.hpp"

using namespace craut;
using namespace craut::testing;

namespace {

void check_certificate(const LinDiffPoly& p, const std::vector<LinDiffPoly>& Q,
                       const ReduceResult& res) {
    LinDiffPoly replay = replay_certificate(res.certificate, Q);
    CHECK(replay + res.remainder == p);
}

}  // namespace

TEST_CASE("reduction by itself gives zero with the identity certificate") {
    RingPtr ring = real_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});
    LinDiffPoly p = P(ring, "u[0,2] - v[1,1]");
    std::vector<LinDiffPoly> Q{p};
    ReduceResult res = ritt_reduce(p, Q, r);
    CHECK(res.remainder.is_zero());
    REQUIRE(res.certificate.size() == 1);
    CHECK(res.certificate[0].theta.is_identity());
    CHECK(res.certificate[0].coeff == GaussRat::one());
    check_certificate(p, Q, res);
}

TEST_CASE("single prolongation step") {
    RingPtr ring = real_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});
    std::vector<LinDiffPoly> Q{P(ring, "u[2,0] - u[1,1]")};
    ReduceResult res = ritt_reduce(P(ring, "u[2,1]"), Q, r);
    CHECK(res.remainder == P(ring, "u[1,2]"));
    check_certificate(P(ring, "u[2,1]"), Q, res);
    CHECK(is_reduced_against(res.remainder, Q, r, false));
}

TEST_CASE("underivable leaders stay untouched") {
    RingPtr ring = real_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});
    std::vector<LinDiffPoly> Q{P(ring, "v[2,0]")};
    LinDiffPoly p = P(ring, "u[0,2] - v[1,1]");
    ReduceResult res = ritt_reduce(p, Q, r);
    CHECK(res.remainder == p);
    CHECK(res.certificate.empty());
}

TEST_CASE("empty divisor set returns the input") {
    RingPtr ring = real_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});
    LinDiffPoly p = P(ring, "u[1,1] + 3");
    ReduceResult res = extended_ritt_reduce(p, {}, r);
    CHECK(res.remainder == p);
}

TEST_CASE("rank trace strictly decreases") {
    RingPtr ring = real_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});
    std::vector<LinDiffPoly> Q{P(ring, "u[2,0] - u[0,1]"), P(ring, "u[0,1] - v")};
    ReduceResult res = ritt_reduce(P(ring, "u[2,2] + u[2,1] + u[0,1]"), Q, r);
    for (size_t t = 1; t < res.rank_trace.size(); ++t)
        CHECK(r.compare(res.rank_trace[t], res.rank_trace[t - 1]) < 0);
    check_certificate(P(ring, "u[2,2] + u[2,1] + u[0,1]"), Q, res);
}

TEST_CASE("extended reduction reaches through the bar") {
    RingPtr ring = tagged_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});

    // bar(u_x) reduced by q = u_x - i v: uses bar(q) = bar(u)_x + i bar(v).
    std::vector<LinDiffPoly> Q{P(ring, "u[1,0] - i*v")};
    ReduceResult res = extended_ritt_reduce(P(ring, "bar(u)[1,0]"), Q, r);
    CHECK(res.remainder == P(ring, "-i*bar(v)"));
    REQUIRE(res.certificate.size() == 1);
    CHECK(res.certificate[0].barred);
    check_certificate(P(ring, "bar(u)[1,0]"), Q, res);

    // bar(u)_xx = d/dx bar(u_x) reduces to zero over {u_x}.
    std::vector<LinDiffPoly> Q2{P(ring, "u[1,0]")};
    CHECK(extended_ritt_reduce(P(ring, "bar(u)[2,0]"), Q2, r).remainder.is_zero());

    // Plain reduction cannot see the bar divisors.
    CHECK(ritt_reduce(P(ring, "bar(u)[2,0]"), Q2, r).remainder == P(ring, "bar(u)[2,0]"));
}

TEST_CASE("extended remainder is irreducible against bars too") {
    RingPtr ring = tagged_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});
    std::vector<LinDiffPoly> Q{P(ring, "u[1,0] - v"), P(ring, "bar(v)[0,1]")};
    ReduceResult res =
        extended_ritt_reduce(P(ring, "u[1,1] + bar(u)[1,1] + v[0,1] + bar(v)[0,2] + v[1,0]"), Q, r);
    CHECK(is_reduced_against(res.remainder, Q, r, true));
    check_certificate(P(ring, "u[1,1] + bar(u)[1,1] + v[0,1] + bar(v)[0,2] + v[1,0]"), Q, res);
}

TEST_CASE("constant divisors collapse everything and are flagged") {
    RingPtr ring = real_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});
    std::vector<LinDiffPoly> Q{P(ring, "2"), P(ring, "u[1,0]")};
    ReduceResult res = ritt_reduce(P(ring, "u[0,1] + v"), Q, r);
    CHECK(res.remainder.is_zero());
    CHECK(res.constant_collapse);
    // Zero divisors are simply dropped.
    std::vector<LinDiffPoly> Q2{LinDiffPoly(ring), P(ring, "u[1,0]")};
    CHECK(ritt_reduce(P(ring, "u[1,1]"), Q2, r).remainder.is_zero());
}

TEST_CASE("monic certificate coefficients divide by the divisor initial") {
    RingPtr ring = real_uv();
    Ranking r(ring, RankingKind::orderly, {"u", "v"});
    std::vector<LinDiffPoly> Q{P(ring, "3*u[1,0] - v")};
    ReduceResult res = ritt_reduce(P(ring, "u[1,1]"), Q, r);
    REQUIRE(res.certificate.size() == 1);
    CHECK(res.certificate[0].coeff == GaussRat::rational(1, 3));
    CHECK(res.remainder == P(ring, "1/3*v[0,1]"));
    check_certificate(P(ring, "u[1,1]"), Q, res);
}
