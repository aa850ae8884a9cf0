#include <doctest.h>

#include <random>

#include "fiberres/homcheck.hpp"
#include "fiberres/resolutions.hpp"
#include "helpers.hpp"

using namespace fiberres;
using namespace testing_support;

namespace {

Polynomial P(const RingSpec& R, const char* s) { return parse_polynomial(s, R); }

} // namespace

TEST_CASE("subsets by size")
{
    auto s = subsets_by_size(3);
    REQUIRE(s.size() == 4);
    CHECK(s[1] == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    CHECK(s[2] == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(s[3].size() == 1);
}

TEST_CASE("Koszul complexes")
{
    RingSpec R({"x1", "x2"});
    ChainComplex K1 = koszul(R, std::vector<Polynomial>{P(R, "x1")});
    CHECK(K1.rank(1) == 1);
    CHECK(K1.module(1).twists() == std::vector<int>{1});

    ChainComplex K = koszul(R, std::vector<Polynomial>{P(R, "x1"), P(R, "x2")});
    CHECK(K.differential(1)(0, 0) == P(R, "x1"));
    CHECK(K.differential(1)(0, 1) == P(R, "x2"));
    CHECK(K.differential(2)(0, 0) == P(R, "-x2"));
    CHECK(K.differential(2)(1, 0) == P(R, "x1"));
    CHECK(is_complex(K));
    CHECK(is_minimal(K));

    ChainComplex Ksq = koszul(R, std::vector<Polynomial>{P(R, "x1^2")});
    CHECK(Ksq.module(1).twists() == std::vector<int>{2});

    CHECK_THROWS_AS(koszul(R, std::vector<Polynomial>{P(R, "x1 + x2^2")}), std::invalid_argument);
    CHECK_THROWS_AS(koszul(R, std::vector<Polynomial>{Polynomial{}}), std::invalid_argument);
}

TEST_CASE("Koszul on monomial regular sequences is exact")
{
    RingSpec R({"a", "b", "c", "d"});
    std::vector<Monomial> f{Monomial({2, 0, 0, 0}), Monomial({0, 1, 1, 0}), Monomial({0, 0, 0, 3})};
    REQUIRE(is_regular_sequence_monomials(f));
    ChainComplex K = koszul(R, f);
    HomologyReport rep = homology_dims(K, 9);
    CHECK(rep.exact_in_positive);
    CHECK(to_i64(hilbert_function(MonomialIdeal(R, f), 9)) == rep.h0_hilbert);
}

TEST_CASE("Taylor complexes")
{
    RingSpec R({"x", "y"});
    ChainComplex T = taylor(MonomialIdeal::parse(R, "x^2, y^2"));
    CHECK(T.rank(1) == 2);
    CHECK(T.rank(2) == 1);
    CHECK(T == koszul(R, std::vector<Monomial>{Monomial({2, 0}), Monomial({0, 2})}));

    ChainComplex T3 = taylor(MonomialIdeal::parse(R, "x^2, x*y, y^2"));
    CHECK(T3.rank(0) == 1);
    CHECK(T3.rank(1) == 3);
    CHECK(T3.rank(2) == 3);
    CHECK(T3.rank(3) == 1);
    CHECK(is_complex(T3));

    CHECK(taylor(MonomialIdeal::parse(R, "x")) == koszul(R, std::vector<Monomial>{Monomial({1, 0})}));
    CHECK_THROWS(taylor(MonomialIdeal::zero(R)));
}

TEST_CASE("minimize")
{
    RingSpec R({"x", "y"});
    ChainComplex T = taylor(MonomialIdeal::parse(R, "x^2, x*y, y^2"));
    ChainComplex M = minimize(T);
    CHECK(M.rank(0) == 1);
    CHECK(M.rank(1) == 3);
    CHECK(M.rank(2) == 2);
    CHECK(M.rank(3) == 0);
    CHECK(is_minimal(M));
    CHECK(is_complex(M));
    CHECK(minimize(M) == M);
    CHECK(homology_dims(M, 6).dims == homology_dims(T, 6).dims);

    ChainComplex K = koszul(R, std::vector<Polynomial>{P(R, "x")});
    CHECK(minimize(cone(ChainMap::identity(K))).is_zero());
}

TEST_CASE("regular sequence test")
{
    CHECK(is_regular_sequence_monomials({Monomial({1, 0, 0, 0}), Monomial({0, 1, 0, 0})}));
    CHECK_FALSE(is_regular_sequence_monomials({Monomial({1, 0}), Monomial({1, 1})}));
    CHECK(is_regular_sequence_monomials({Monomial({1, 0, 1, 0}), Monomial({0, 1, 0, 1})}));
}

TEST_CASE("minimized Taylor resolutions against the Koszul-homology Betti oracle")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        RingSpec R({"a", "b", "c"});
        auto gens = oracle::random_square_ideal(rng, 3, {0, 1, 2}, 4, 3);
        MonomialIdeal I = ideal_of(R, gens);
        ChainComplex T = taylor(I);
        ChainComplex M = minimize(T);
        CHECK(is_complex(T));
        CHECK(is_complex(M));
        REQUIRE(is_minimal(M));
        int kmax = 0;
        for (int n : M.degrees())
            for (int t : M.module(n).twists())
                kmax = std::max(kmax, t);
        CHECK(table_of(graded_betti(M)) == oracle::koszul_betti(exps_of(I), 3, kmax + 1));
        CHECK(M.total_rank() <= T.total_rank());
        HomologyReport rep = homology_dims(M, kmax + 1);
        CHECK(rep.exact_in_positive);
        CHECK(rep.h0_hilbert == oracle::hilbert(exps_of(I), 3, kmax + 1));
    }
}

TEST_CASE("resolution_of picks the construction")
{
    RingSpec R({"x", "y"});
    CHECK(resolution_of(MonomialIdeal::zero(R)) == ChainComplex::ring_itself(R));
    MonomialIdeal ci = MonomialIdeal::parse(R, "x, y^2");
    CHECK(resolution_of(ci) == koszul(R, ci.generators()));
    CHECK(resolution_of(ci).rank(2) == 1);
    CHECK(resolution_of(MonomialIdeal::parse(R, "x^2, x*y")).rank(2) == 1);
}
