#include <doctest.h>

#include "fiberres/io.hpp"
#include "fiberres/resolutions.hpp"
#include "fiberres/star.hpp"
#include "helpers.hpp"

using namespace fiberres;

TEST_CASE("ring round trip")
{
    RingSpec R = RingSpec::with_blocks({"x1", "x2"}, {"y"}, Field::prime(101));
    CHECK(ring_from_json(ring_to_json(R)) == R);
    RingSpec Q({"a"}, Field::rationals());
    CHECK(ring_from_json(ring_to_json(Q)) == Q);
    CHECK_THROWS_AS(ring_from_json(json::parse(R"({"field": "F_7"})")), ParseError);
    CHECK_THROWS_AS(ring_from_json(json::parse(R"({"variables": ["x"], "field": "F_8"})")), ParseError);
}

TEST_CASE("complex round trip keeps differentials and fine degrees")
{
    RingSpec R = RingSpec::with_blocks({"x1", "x2"}, {"y1", "y2"});
    ChainComplex X = koszul(R, std::vector<Monomial>{Monomial({1, 0, 0, 0}), Monomial({0, 1, 0, 0})});
    ChainComplex Y = koszul(R, std::vector<Monomial>{Monomial({0, 0, 1, 0}), Monomial({0, 0, 0, 1})});
    ChainComplex S = star_product(X, Y);
    json j = complex_to_json(S);
    ChainComplex back = complex_from_json(j);
    CHECK(back == S);
    CHECK(back.has_multidegrees());
    CHECK(complex_to_json(back).dump() == j.dump());
}

TEST_CASE("malformed complexes are rejected")
{
    json j = json::parse(R"({"ring": {"variables": ["x"]},
                             "modules": {"0": [0], "1": [1]},
                             "differentials": {"1": [["x", "x"]]}})");
    CHECK_THROWS(complex_from_json(j));
    json k = json::parse(R"({"ring": {"variables": ["x"]},
                             "modules": {"0": [0], "1": [1]},
                             "differentials": {"1": [["x^2"]]}})");
    CHECK_THROWS_AS(complex_from_json(k), ComplexError);
    json l = json::parse(R"({"ring": {"variables": ["x"]}, "modules": {"zero": [0]}})");
    CHECK_THROWS_AS(complex_from_json(l), ParseError);
}

TEST_CASE("Betti table round trip")
{
    BettiTable t;
    t.add(0, 0);
    t.add(1, 2, 3);
    t.add(2, 3, 2);
    CHECK(betti_from_json(betti_to_json(t)) == t);
    BettiTable tot = BettiTable::from_totals({1, 4, 4, 1});
    CHECK(betti_from_json(betti_to_json(tot)) == tot);
    CHECK(betti_to_json(t).dump() == R"({"graded":{"0,0":1,"1,2":3,"2,3":2},"totals":{"0":1,"1":3,"2":2}})");
}

TEST_CASE("instance round trip")
{
    RingSpec R = RingSpec::with_blocks({"x"}, {"y"});
    FiberInstance inst = FiberInstance::from_blocks(MonomialIdeal::parse(R, "x^2"), MonomialIdeal::parse(R, "y^3"));
    FiberInstance back = instance_from_json(instance_to_json(inst));
    CHECK(back.Ip == inst.Ip);
    CHECK(back.J == inst.J);
    CHECK(back.S == inst.S);

    json blocks = {{"ring", ring_to_json(R)}, {"Ip", "x^2"}, {"Jp", json::array({"y^2"})}};
    FiberInstance b = instance_from_json(blocks);
    CHECK(b.I == MonomialIdeal::parse(R, "x"));
    CHECK(b.Jp == MonomialIdeal::parse(R, "y^2"));

    json bad = {{"ring", ring_to_json(R)}, {"Ip", "y"}, {"I", "x"}, {"J", "y"}};
    CHECK_THROWS_AS(instance_from_json(bad), HypothesisError);
}

TEST_CASE("series and report JSON")
{
    json s = series_to_json(PowerSeries({1, 4, 4, 1}, 4));
    CHECK(s["coefficients"] == json::array({1, 4, 4, 1, 0}));
    CHECK(s["truncation"] == 4);
}
