#include <doctest.h>

#include "lstc/errors.hpp"
#include "lstc/spaces.hpp"

using namespace lstc;

TEST_CASE("cat bounds collapse on the catalog") {
    SUBCASE("F(CP^3,2)") {
        const auto info = fcpn_space(3);
        const auto cup = cup_length(QuotientAlgebra::build(info.presentation));
        const auto [lo, hi] = cat_bounds(info, cup);
        CHECK(lo == 6);
        CHECK(hi == 6);
    }
    SUBCASE("CP^2") {
        const auto info = cpn_space(2);
        const auto cup = cup_length(QuotientAlgebra::build(info.presentation));
        const auto [lo, hi] = cat_bounds(info, cup);
        CHECK(lo == 3);
        CHECK(hi == 3);
    }
    SUBCASE("trivial reduced cohomology gives the contractible normalization") {
        SpaceInfo info;
        info.name = "point-like";
        info.presentation = parse_presentation("gen x 2\nrel x\n");
        info.cw_dimension = 0;
        info.connectivity = 1;
        const auto cup = cup_length(QuotientAlgebra::build(info.presentation));
        CHECK(cup.cup_length == 0);
        const auto [lo, hi] = cat_bounds(info, cup);
        CHECK(lo == 1);
        CHECK(hi == 1);
    }
    SUBCASE("missing CW data is rejected") {
        SpaceInfo info;
        info.presentation = cpn_presentation(1);
        CHECK_THROWS_AS(cat_bounds(info, CupResult{}), InvalidParameterError);
    }
}

TEST_CASE("tc bounds") {
    SUBCASE("F(CP^2,2): 7 from both sides") {
        const auto info = fcpn_space(2);
        const auto A = QuotientAlgebra::build(info.presentation);
        const auto z = zcl(A);
        const auto [lo, hi] = tc_bounds(info, 4, z);
        CHECK(lo == 7);
        CHECK(hi == 7);
    }
    SUBCASE("no dimensional upper bound without paracompactness") {
        auto info = fcpn_space(2);
        info.paracompact = false;
        const auto z = zcl(QuotientAlgebra::build(info.presentation));
        const auto [lo, hi] = tc_bounds(info, 4, z);
        CHECK(lo == 7);
        CHECK_FALSE(hi.has_value());
    }
}

TEST_CASE("full reports on catalog spaces") {
    SUBCASE("F(CP^4,2)") {
        const auto rep = report(fcpn_space(4));
        REQUIRE(rep.cat);
        REQUIRE(rep.tc);
        CHECK(rep.cat->exact == 8);
        CHECK(rep.tc->exact == 15);
        CHECK(rep.ganea);
    }
    SUBCASE("CP^1 behaves like the sphere ring") {
        const auto rep = report(cpn_space(1));
        CHECK(rep.betti == std::vector<int>{1, 0, 1});
        CHECK(rep.cat->exact == 2);
        CHECK(rep.tc->exact == 3);
    }
    SUBCASE("unbounded input produces no partial report") {
        SpaceInfo info;
        info.name = "free";
        info.presentation = parse_presentation("gen x 2\n");
        info.cw_dimension = 2;
        info.connectivity = 1;
        CHECK_THROWS_AS(report(info), UnboundedAlgebraError);
    }
}

TEST_CASE("headline identities for n up to 8") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const auto rep = report(fcpn_space(n));
        REQUIRE(rep.cat);
        REQUIRE(rep.tc);
        CHECK(rep.cat->lower <= *rep.cat->upper);
        CHECK(rep.tc->lower <= *rep.tc->upper);
        CHECK(rep.cat->exact == 2 * n);
        CHECK(rep.tc->exact == 4 * n - 1);
        CHECK(rep.ganea);
        CHECK(rep.cup.cup_length + 1 == *rep.cat->exact);
    }
}

TEST_CASE("product comparison: two fewer open sets suffice for distinct points") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const auto conf = report(fcpn_space(n));
        const auto prod = report(product_space(cpn_space(n), cpn_space(n)));
        REQUIRE(conf.tc->exact);
        REQUIRE(prod.tc->exact);
        CHECK(*prod.tc->exact == 4 * n + 1);
        CHECK(*prod.tc->exact - *conf.tc->exact == 2);
    }
}

TEST_CASE("interval consistency on the whole catalog") {
    std::vector<SpaceInfo> spaces;
    for (int n = 1; n <= 8; ++n) spaces.push_back(fcpn_space(n));
    for (int n = 1; n <= 4; ++n) spaces.push_back(cpn_space(n));
    for (int n = 1; n <= 4; ++n)
        spaces.push_back(product_space(cpn_space(n), cpn_space(n)));
    for (const auto& s : spaces) {
        CAPTURE(s.name);
        const auto rep = report(s);
        CHECK(rep.cat->lower <= *rep.cat->upper);
        CHECK(rep.tc->lower <= *rep.tc->upper);
        CHECK(rep.zcl.lower <= rep.zcl.upper);
    }
}

TEST_CASE("cat upper bound is monotone in the CW dimension") {
    const CupResult cup{3, Monomial({1, 2}), true};
    SpaceInfo info;
    info.presentation = fcpn_presentation(2);
    info.connectivity = 1;
    int previous = 0;
    for (int dim = 6; dim <= 30; dim += 2) {
        info.cw_dimension = dim;
        const auto [lo, hi] = cat_bounds(info, cup);
        CHECK(hi >= previous);
        previous = hi;
    }
}

TEST_CASE("report validates its CW inputs against the algebra") {
    SUBCASE("cw dimension below the top degree") {
        auto info = fcpn_space(2);
        info.cw_dimension = 4;  // top degree is 6
        CHECK_THROWS_AS(report(info), InvalidParameterError);
    }
    SUBCASE("connectivity contradicting a Betti number") {
        auto info = cpn_space(1);
        info.connectivity = 2;  // H^2 is nonzero
        CHECK_THROWS_AS(report(info), InvalidParameterError);
    }
}

TEST_CASE("degraded modes") {
    SUBCASE("algebra-only when CW data is absent") {
        SpaceInfo info;
        info.name = "bare ring";
        info.presentation = fcpn_presentation(2);
        const auto rep = report(info);
        CHECK(rep.algebra_only());
        CHECK_FALSE(rep.cat);
        CHECK_FALSE(rep.tc);
        CHECK_FALSE(rep.truncated);
        CHECK(rep.cup.cup_length == 3);
        CHECK(rep.zcl.lower == 6);
    }
    SUBCASE("truncated when the cap is user-supplied") {
        SpaceInfo info;
        info.name = "capped";
        info.presentation = parse_presentation("gen x 2\nmaxdeg 6\n");
        const auto rep = report(info);
        CHECK(rep.truncated);
        CHECK_FALSE(rep.cup.exact);
        CHECK_FALSE(rep.zcl.exact);
        CHECK(rep.betti == std::vector<int>{1, 0, 1, 0, 1, 0, 1});
    }
}
