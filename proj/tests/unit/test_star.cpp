#include <doctest.h>

#include "fiberres/formulas.hpp"
#include "fiberres/homcheck.hpp"
#include "fiberres/resolutions.hpp"
#include "fiberres/star.hpp"
#include "helpers.hpp"

using namespace fiberres;
using namespace testing_support;

namespace {

Polynomial P(const RingSpec& R, const char* s) { return parse_polynomial(s, R); }

ChainComplex var_koszul(const RingSpec& R, const std::vector<std::size_t>& idx)
{
    std::vector<Monomial> v;
    for (auto i : idx)
        v.push_back(Monomial::variable(R.nvars(), i));
    return koszul(R, v);
}

} // namespace

TEST_CASE("star product of two Koszul complexes on two variables each")
{
    RingSpec R = RingSpec::with_blocks({"x1", "x2"}, {"y1", "y2"});
    ChainComplex X = var_koszul(R, {0, 1}), Y = var_koszul(R, {2, 3});
    ChainComplex S = star_product(X, Y);
    CHECK(S.rank(0) == 1);
    CHECK(S.rank(1) == 4);
    CHECK(S.rank(2) == 4);
    CHECK(S.rank(3) == 1);

    const char* d1[] = {"x1*y1", "x1*y2", "x2*y1", "x2*y2"};
    for (int c = 0; c < 4; ++c)
        CHECK(S.differential(1)(0, c) == P(R, d1[c]));
    const char* d2[4][4] = {{"y2", "0", "-x2", "0"}, {"-y1", "0", "0", "-x2"}, {"0", "y2", "x1", "0"}, {"0", "-y1", "0", "x1"}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(S.differential(2)(r, c) == P(R, d2[r][c]));
    const char* d3[] = {"-x2", "x1", "-y2", "y1"};
    for (int r = 0; r < 4; ++r)
        CHECK(S.differential(3)(r, 0) == P(R, d3[r]));

    CHECK(is_complex(S));
    CHECK(is_minimal(S));
    CHECK(generating_function(S, 4) == PowerSeries({1, 4, 4, 1}, 4));
    BettiTable b = graded_betti(S);
    CHECK(b.graded(1, 2) == 4);
    CHECK(b.graded(2, 3) == 4);
    CHECK(b.graded(3, 4) == 1);
    CHECK(star_betti_check(X, Y));
}

TEST_CASE("star basis index")
{
    RingSpec R = RingSpec::with_blocks({"x1", "x2"}, {"y1", "y2"});
    ChainComplex X = var_koszul(R, {0, 1}), Y = var_koszul(R, {2, 3});
    CHECK(star_index(X, Y, 1, 1, 1, 0) == 2);
    CHECK(star_index(X, Y, 1, 2, 1, 0) == 1);
    CHECK(star_index(X, Y, 2, 1, 0, 1) == 3);
    CHECK_THROWS_AS(star_index(X, Y, 3, 1, 0, 0), ComplexError);
}

TEST_CASE("self star product of Koszul(x) resolves R/x^2")
{
    RingSpec R({"x", "y"});
    ChainComplex X = var_koszul(R, {0});
    ChainComplex S = star_product(X, X);
    CHECK(S.rank(1) == 1);
    CHECK(S.rank(2) == 0);
    CHECK(S.differential(1)(0, 0) == P(R, "x^2"));
    HomologyReport rep = homology_dims(S, 6);
    CHECK(rep.exact_in_positive);
    CHECK(rep.h0_hilbert == std::vector<std::int64_t>{1, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("star inputs must be augmented")
{
    RingSpec R({"x", "y"});
    ChainComplex X = var_koszul(R, {0});
    CHECK_THROWS_AS(star_product(suspension(X, 1), X), ComplexError);
    CHECK_THROWS_AS(star_product(X, var_koszul(RingSpec({"x"}), {0})), RingMismatch);
}

TEST_CASE("Koszul rank formula for m, n <= 4")
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            RingSpec R = block_ring(m, n);
            ChainComplex S = star_product(var_koszul(R, R.block_a_indices()), var_koszul(R, R.block_b_indices()));
            for (int l = 1; l <= m + n; ++l)
                CHECK(static_cast<std::int64_t>(S.rank(l)) ==
                      binomial(m + n, l + 1) - binomial(m, l + 1) - binomial(n, l + 1));
        }
}

TEST_CASE("star of a minimized Taylor resolution with Koszul(z)")
{
    RingSpec R({"x", "y", "z"});
    ChainComplex X = minimize(taylor(MonomialIdeal::parse(R, "x^2,x*y,y^2")));
    ChainComplex Y = var_koszul(R, {2});
    ChainComplex S = star_product(X, Y);
    CHECK(S.rank(1) == 3);
    CHECK(S.rank(2) == 2);
    CHECK(star_betti_check(X, Y));
    CHECK(is_minimal(S));
    HomologyReport rep = homology_dims(S, 6);
    CHECK(rep.exact_in_positive);
    CHECK(to_i64(hilbert_function(MonomialIdeal::parse(R, "x^2*z,x*y*z,y^2*z"), 6)) == rep.h0_hilbert);
    CHECK_THROWS_AS(star_betti_check(taylor(MonomialIdeal::parse(R, "x^2,x*y,y^2")), Y), ComplexError);
}

TEST_CASE("star generating function identity")
{
    RingSpec R = block_ring(2, 2);
    ChainComplex X = minimize(taylor(MonomialIdeal::parse(R, "x1^2,x1*x2^2,x2^3")));
    ChainComplex Y = var_koszul(R, R.block_b_indices());
    ChainComplex S = star_product(X, Y);
    CHECK(generating_function(S, 4) == poincare_product(generating_function(X, 5), generating_function(Y, 5)));
    HomologyReport rep = homology_dims(S, 8);
    CHECK(rep.exact_in_positive);
}
