#include <doctest.h>

#include "fiberres/formulas.hpp"
#include "fiberres/resolutions.hpp"
#include "fiberres/star.hpp"

using namespace fiberres;

namespace {

BettiTable graded(std::initializer_list<std::tuple<int, int, std::int64_t>> entries)
{
    BettiTable t;
    for (auto [l, k, n] : entries)
        t.add(l, k, n);
    return t;
}

} // namespace

TEST_CASE("binomial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(30, 15) == 155117520);
}

TEST_CASE("Vandermonde")
{
    CHECK(vandermonde_check(2, 2, 2));
    CHECK(vandermonde_check(3, 1, 0));
    CHECK(vandermonde_check(5, 7, 6));
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            for (int r = 0; r <= m + n + 1; ++r)
                CHECK(vandermonde_check(m, n, r));
}

TEST_CASE("betti_product")
{
    BettiTable principal = BettiTable::from_totals({1, 1});
    CHECK(betti_product(principal, principal, 1) == 1);
    BettiTable k2 = BettiTable::from_totals({1, 2, 1});
    CHECK(betti_product(k2, k2, 1) == 4);
    CHECK(betti_product(k2, k2, 2) == 4);
    CHECK(betti_product(k2, k2, 3) == 1);
    CHECK(betti_product(k2, k2, 4) == 0);
    BettiTable q = BettiTable::from_totals({1, 3, 2});
    CHECK(betti_product(q, principal, 1) == 3);
    CHECK(betti_product(q, principal, 2) == 2);
    CHECK(betti_product(q, principal, 3) == 0);
    CHECK_THROWS_AS(betti_product(q, principal, 0), std::invalid_argument);
}

TEST_CASE("graded_betti_product")
{
    BettiTable x = graded({{0, 0, 1}, {1, 1, 1}});
    CHECK(graded_betti_product(x, x, 1, 2) == 1);
    CHECK(graded_betti_product(x, x, 1, 1) == 0);
    BettiTable k2 = graded({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}});
    CHECK(graded_betti_product(k2, k2, 1, 2) == 4);
    CHECK(graded_betti_product(k2, k2, 2, 3) == 4);
    CHECK(graded_betti_product(k2, k2, 3, 4) == 1);
    CHECK(graded_betti_product(k2, k2, 2, 2) == 0);
}

TEST_CASE("star Betti formula against construction")
{
    RingSpec R = RingSpec::with_blocks({"x1", "x2"}, {"y1", "y2"});
    ChainComplex X = koszul(R, std::vector<Monomial>{Monomial({1, 0, 0, 0}), Monomial({0, 1, 0, 0})});
    ChainComplex Y = koszul(R, std::vector<Monomial>{Monomial({0, 0, 1, 0}), Monomial({0, 0, 0, 1})});
    CHECK(star_betti_formula(graded_betti(X), graded_betti(Y)) == graded_betti(star_product(X, Y)));
}

TEST_CASE("poincare_product")
{
    CHECK(poincare_product(PowerSeries({1, 1}, 4), PowerSeries({1, 1}, 4)) == PowerSeries({1, 1}, 3));
    CHECK(poincare_product(PowerSeries({1, 2, 1}, 5), PowerSeries({1, 2, 1}, 5)) == PowerSeries({1, 4, 4, 1}, 4));
    CHECK(poincare_product(PowerSeries::one(4), PowerSeries({1, 3, 2}, 4)) == PowerSeries::one(3));
    CHECK_THROWS_AS(poincare_product(PowerSeries({2, 1}, 3), PowerSeries({1, 1}, 3)), std::invalid_argument);
}

TEST_CASE("betti_fiber")
{
    BettiTable p = BettiTable::from_totals({1, 1});
    CHECK(betti_fiber(1, 1, 1, p, p) == 3);
    CHECK(betti_fiber(2, 1, 1, p, p) == 2);
    CHECK(betti_fiber(3, 1, 1, p, p) == 0);
    BettiTable zero = BettiTable::from_totals({1});
    for (int l = 1; l <= 4; ++l)
        CHECK(betti_fiber(l, 2, 2, zero, zero) == binomial(4, l + 1) - 2 * binomial(2, l + 1));
    BettiTable k2 = BettiTable::from_totals({1, 2, 1});
    // I' = <x1^2, x2^2>, J' = <y1^2, y2^2> in four variables
    CHECK(betti_fiber(1, 2, 2, k2, k2) == 8);
}

TEST_CASE("graded_betti_fiber on the quadratic instance")
{
    BettiTable x = graded({{0, 0, 1}, {1, 1, 1}});
    BettiTable x2 = graded({{0, 0, 1}, {1, 2, 1}});
    BettiTable xy = graded({{0, 0, 1}, {1, 2, 1}});
    CHECK(graded_betti_fiber(0, 0, xy, x, x2, x, x2) == 1);
    CHECK(graded_betti_fiber(1, 2, xy, x, x2, x, x2) == 3);
    CHECK(graded_betti_fiber(2, 3, xy, x, x2, x, x2) == 2);
    CHECK(graded_betti_fiber(2, 2, xy, x, x2, x, x2) == 0);
    CHECK(graded_betti_fiber(1, 1, xy, x, x2, x, x2) == 0);
    BettiTable full = fiber_betti_formula(xy, x, x2, x, x2);
    CHECK(full.totals_vector() == std::vector<std::int64_t>{1, 3, 2});
}

TEST_CASE("Poincare identities on hand-expanded series")
{
    // k[x]/x^2 x k[y]/y^2: P_F = 1 + 3t + 2t^2
    PowerSeries PF({1, 3, 2}, 6), Px2({1, 1}, 6);
    CHECK(poincare_identity_2(PF, Px2, Px2, 1, 1).is_zero());
    // P_{R/(I'+J)} = P_{R/<x^2,y>} = (1+t)^2, same on the other side; P_{R/(I+J)} = (1+t)^2
    PowerSeries sq = PowerSeries::one_plus_t_pow(2, 6);
    PowerSeries PIJ = ideal_series_from_quotient(PowerSeries({1, 1}, 7));
    CHECK(poincare_identity_1(PF, sq, sq, sq, PIJ).is_zero());
    CHECK_FALSE(poincare_identity_2(PowerSeries({1, 3, 3}, 6), Px2, Px2, 1, 1).is_zero());

    // I' = J' = 0: P_F is the star product series
    PowerSeries star = poincare_product(PowerSeries::one_plus_t_pow(2, 7), PowerSeries::one_plus_t_pow(1, 7));
    CHECK(poincare_identity_2(star, PowerSeries::one(6), PowerSeries::one(6), 2, 1).is_zero());
}

TEST_CASE("ideal series from the quotient")
{
    CHECK(ideal_series_from_quotient(PowerSeries({1, 4, 4, 1}, 5)) == PowerSeries({4, 4, 1}, 4));
    CHECK_THROWS(ideal_series_from_quotient(PowerSeries({2, 1}, 3)));
}
