#include <doctest.h>

#include <random>

#include "fiberres/complex.hpp"
#include "fiberres/resolutions.hpp"
#include "helpers.hpp"

using namespace fiberres;

namespace {

RingSpec xy() { return RingSpec({"x", "y"}); }

Polynomial P(const RingSpec& R, const char* s) { return parse_polynomial(s, R); }

ChainComplex kos(const RingSpec& R, std::initializer_list<const char*> f)
{
    std::vector<Polynomial> v;
    for (auto s : f)
        v.push_back(P(R, s));
    return koszul(R, v);
}

// degree 0 -> R, degree 1 -> R(-1), degree 2 -> R(-2) with both maps x
ChainComplex x_twice(const RingSpec& R)
{
    std::map<int, GradedFreeModule> m{{0, GradedFreeModule({0})}, {1, GradedFreeModule({1})}, {2, GradedFreeModule({2})}};
    PolyMatrix d1(1, 1), d2(1, 1);
    d1(0, 0) = P(R, "x");
    d2(0, 0) = P(R, "x");
    return ChainComplex(R, m, {{1, d1}, {2, d2}});
}

std::vector<std::size_t> ranks(const ChainComplex& C, int lo, int hi)
{
    std::vector<std::size_t> r;
    for (int n = lo; n <= hi; ++n)
        r.push_back(C.rank(n));
    return r;
}

} // namespace

TEST_CASE("construction validates shapes and homogeneity")
{
    RingSpec R = xy();
    std::map<int, GradedFreeModule> m{{0, GradedFreeModule({0})}, {1, GradedFreeModule({2})}};
    PolyMatrix good(1, 1), bad(1, 1), wrong(2, 1);
    good(0, 0) = P(R, "x*y");
    bad(0, 0) = P(R, "x");
    CHECK_NOTHROW(ChainComplex(R, m, {{1, good}}));
    CHECK_THROWS_AS(ChainComplex(R, m, {{1, bad}}), ComplexError);
    CHECK_THROWS_AS(ChainComplex(R, m, {{1, wrong}}), ComplexError);
    PolyMatrix inhom(1, 1);
    inhom(0, 0) = P(R, "x^2 + y");
    CHECK_THROWS_AS(ChainComplex(R, m, {{1, inhom}}), ComplexError);
}

TEST_CASE("suspension")
{
    RingSpec R = xy();
    ChainComplex K = kos(R, {"x", "y"});
    CHECK(suspension(K, 0) == K);
    CHECK(suspension(suspension(K, -1), 1) == K);
    ChainComplex S = suspension(K, 1);
    CHECK(S.min_degree() == 1);
    CHECK(S.differential(2) == -K.differential(1));
    CHECK(suspension(K, 2).differential(3) == K.differential(1));
    ChainComplex one = suspension(ChainComplex::ring_itself(R), 1);
    CHECK(one.rank(1) == 1);
    CHECK(one.rank(0) == 0);
}

TEST_CASE("hard truncation")
{
    RingSpec R = xy();
    ChainComplex K = kos(R, {"x"});
    ChainComplex T = truncate_geq(K, 1);
    CHECK(T.rank(0) == 0);
    CHECK(T.rank(1) == 1);
    CHECK(T.differential(1).is_zero());
    CHECK(truncate_geq(T, 1) == T);
    CHECK(truncate_geq(K, 0) == K);
    ChainComplex K2 = kos(R, {"x", "y"});
    CHECK(truncate_geq(truncate_geq(K2, 1), 1) == truncate_geq(K2, 1));
    CHECK(is_complex(truncate_geq(K2, 2)));
}

TEST_CASE("tensor")
{
    RingSpec R = xy();
    ChainComplex A = kos(R, {"x"}), B = kos(R, {"y"});
    ChainComplex T = tensor(A, B);
    CHECK(ranks(T, 0, 2) == std::vector<std::size_t>{1, 2, 1});
    CHECK(is_complex(T));
    CHECK(is_minimal(T));
    CHECK(tensor(A, ChainComplex::ring_itself(R)) == A);
    CHECK(tensor(ChainComplex::ring_itself(R), A) == A);
    CHECK_THROWS_AS(tensor(A, kos(RingSpec({"x"}), {"x"})), RingMismatch);
}

TEST_CASE("tensor ranks convolve and the generating function multiplies")
{
    RingSpec R({"a", "b", "c", "d"});
    ChainComplex A = minimize(taylor(MonomialIdeal::parse(R, "a^2,a*b,b^2")));
    ChainComplex B = kos(R, {"c", "d^2"});
    ChainComplex T = tensor(A, B);
    CHECK(is_complex(T));
    CHECK(is_minimal(T));
    for (int n = 0; n <= 4; ++n) {
        std::size_t conv = 0;
        for (int i = 0; i <= n; ++i)
            conv += A.rank(i) * B.rank(n - i);
        CHECK(T.rank(n) == conv);
    }
    CHECK(generating_function(T, 5) == generating_function(A, 5) * generating_function(B, 5));
}

TEST_CASE("direct sum")
{
    RingSpec R = xy();
    ChainComplex A = kos(R, {"x", "y"}), B = kos(R, {"x^2"});
    ChainComplex S = direct_sum(A, B);
    CHECK(ranks(S, 0, 2) == std::vector<std::size_t>{2, 3, 1});
    CHECK(is_complex(S));
    CHECK(direct_sum(A, ChainComplex(R)) == A);
    CHECK(generating_function(S, 3) == generating_function(A, 3) + generating_function(B, 3));
}

TEST_CASE("cone")
{
    RingSpec R = xy();
    ChainComplex K = kos(R, {"x"});
    ChainComplex C = cone(ChainMap::identity(K));
    CHECK(is_complex(C));
    CHECK(ranks(C, 0, 2) == std::vector<std::size_t>{1, 2, 1});
    // contractible: minimization removes everything
    CHECK(minimize(C).is_zero());

    ChainComplex Z = cone(ChainMap::zero(K, K));
    CHECK(is_complex(Z));
    CHECK(ranks(Z, 0, 2) == std::vector<std::size_t>{1, 2, 1});

    // a map that fails to commute is refused
    ChainComplex K2 = kos(R, {"x", "y"});
    PolyMatrix f0(1, 1);
    f0(0, 0) = Polynomial::constant(Scalar::one(R.field()), 2);
    CHECK_THROWS_AS(cone(ChainMap(K, K2, {{0, f0}})), ComplexError);
}

TEST_CASE("is_complex and is_minimal")
{
    RingSpec R = xy();
    CHECK(is_complex(kos(R, {"x", "y"})));
    CHECK_FALSE(is_complex(x_twice(R)));
    CHECK(is_complex(ChainComplex::ring_itself(R)));
    CHECK(is_minimal(kos(R, {"x", "y"})));
    // <x, xy> as listed, before minimization
    CHECK_FALSE(is_minimal(taylor_from_generators(R, {Monomial({1, 0}), Monomial({1, 1})})));
    std::map<int, GradedFreeModule> m{{0, GradedFreeModule({0})}, {1, GradedFreeModule({0})}};
    PolyMatrix d(1, 1);
    d(0, 0) = Polynomial::constant(Scalar::one(R.field()), 2);
    CHECK_FALSE(is_minimal(ChainComplex(R, m, {{1, d}})));
}

TEST_CASE("generating function and graded Betti numbers")
{
    RingSpec R = xy();
    CHECK(generating_function(kos(R, {"x", "y"}), 3) == PowerSeries({1, 2, 1}, 3));
    CHECK(generating_function(ChainComplex(R), 2).is_zero());
    CHECK_THROWS_AS(generating_function(suspension(kos(R, {"x"}), -1), 2), ComplexError);

    BettiTable b = graded_betti(kos(R, {"x*y"}));
    CHECK(b.graded(0, 0) == 1);
    CHECK(b.graded(1, 2) == 1);
    CHECK(b.total(1) == 1);
    BettiTable z = graded_betti(ChainComplex::ring_itself(R));
    CHECK(z.graded(0, 0) == 1);
    CHECK(z.max_degree() == 0);
    CHECK_THROWS_AS(graded_betti(taylor_from_generators(R, {Monomial({1, 0}), Monomial({1, 1})})), ComplexError);
}

TEST_CASE("cones of scalar multiples of the identity satisfy d^2 = 0")
{
    std::mt19937 rng(3);
    RingSpec R({"a", "b", "c"});
    ChainComplex K = koszul(R, std::vector<Monomial>{Monomial({1, 0, 0}), Monomial({0, 2, 0}), Monomial({0, 0, 1})});
    std::uniform_int_distribution<int> c(-9, 9);
    for (int trial = 0; trial < 10; ++trial) {
        Scalar s = Scalar::from_int(c(rng), R.field());
        std::map<int, PolyMatrix> mats;
        for (int n : K.degrees())
            mats[n] = PolyMatrix::identity(K.rank(n), R).scaled(s);
        ChainMap f(K, K, mats);
        CHECK(is_chain_map(f));
        ChainComplex C = cone(f);
        CHECK(is_complex(C));
        CHECK(C.total_rank() == 2 * K.total_rank());
    }
}
