#include <doctest.h>

#include <random>

#include "fiberres/fiber.hpp"
#include "fiberres/formulas.hpp"
#include "fiberres/homcheck.hpp"
#include "fiberres/star.hpp"
#include "helpers.hpp"

using namespace fiberres;
using namespace testing_support;

namespace {

Polynomial P(const RingSpec& R, const char* s) { return parse_polynomial(s, R); }

MonomialIdeal Id(const RingSpec& R, const char* s) { return MonomialIdeal::parse(R, s); }

FiberInstance quadratic()
{
    RingSpec R = RingSpec::with_blocks({"x"}, {"y"});
    return FiberInstance::from_blocks(Id(R, "x^2"), Id(R, "y^2"));
}

bool entries_in(const ChainMap& f, const MonomialIdeal& I)
{
    for (const auto& [n, m] : f.matrices()) {
        if (n < 1)
            continue;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!ideal_membership(m(r, c), I))
                    return false;
    }
    return true;
}

} // namespace

TEST_CASE("lifting the identity of R")
{
    RingSpec R({"x", "y"});
    ChainComplex S = koszul(R, std::vector<Polynomial>{P(R, "x^2")});
    ChainComplex X = koszul(R, std::vector<Polynomial>{P(R, "x")});
    LiftReport L = lift_chain_map(S, X);
    CHECK(is_chain_map(L.phi));
    CHECK(L.phi.at(0)(0, 0) == Polynomial::constant(Scalar::one(R.field()), 2));
    CHECK(L.phi.at(1)(0, 0) == P(R, "x"));

    LiftReport id = lift_chain_map(X, X);
    CHECK(is_chain_map(id.phi));
    for (int n : X.degrees())
        CHECK(id.phi.at(n) == PolyMatrix::identity(X.rank(n), R));

    CHECK_THROWS_AS(lift_chain_map(X, S), HypothesisError);
}

TEST_CASE("constrained lift lands in the ideal")
{
    RingSpec R({"x1", "x2"});
    MonomialIdeal I = Id(R, "x1,x2");
    ChainComplex S = minimize(taylor(Id(R, "x1^2,x1*x2,x2^2")));
    ChainComplex X = resolution_of(I);
    LiftReport L = lift_chain_map(S, X, I);
    CHECK(L.constrained);
    CHECK(is_chain_map(L.phi));
    CHECK(entries_in(L.phi, I));
}

TEST_CASE("Phi and Psi on the quadratic instance")
{
    FiberInstance inst = quadratic();
    const RingSpec& R = inst.ring;
    FiberBuild b = build_fiber(inst);
    CHECK(is_chain_map(b.Phi));
    CHECK(is_chain_map(b.Psi));
    CHECK(is_chain_map(b.Omega));
    CHECK(b.Phi.at(0)(0, 0) == P(R, "x^2"));
    CHECK(b.Psi.at(0)(0, 0) == P(R, "y^2"));

    ChainComplex res = b.resolution;
    CHECK(res.rank(0) == 1);
    CHECK(res.rank(1) == 3);
    CHECK(res.rank(2) == 2);
    CHECK(res.rank(3) == 0);
    HomologyReport rep = homology_dims(res, 6);
    CHECK(rep.exact_in_positive);
    CHECK(rep.h0_hilbert == std::vector<std::int64_t>{1, 2, 0, 0, 0, 0, 0});

    MinimalityCertificate c = certify_minimal(inst, b);
    CHECK(c.hypotheses);
    CHECK(c.is_minimal);
    BettiTable g = graded_betti(res);
    CHECK(g.graded(0, 0) == 1);
    CHECK(g.graded(1, 2) == 3);
    CHECK(g.graded(2, 3) == 2);
    CHECK(g == graded_betti(minimize(taylor(Id(R, "x^2,x*y,y^2")))));
}

TEST_CASE("Phi vanishes on S_j tensor Y_0 for j >= 2")
{
    RingSpec R = RingSpec::with_blocks({"x1", "x2"}, {"y1"});
    FiberInstance inst = FiberInstance::from_blocks(Id(R, "x1^2,x1*x2,x2^2"), Id(R, "y1^2"));
    FiberBuild b = build_fiber(inst);
    ChainComplex src = b.Phi.source();
    // degree n of the source holds (S_{>=1} ⊗ Y)_{n+1}; the S_{n+1} ⊗ Y_0 block
    for (int n = 1; n <= src.max_degree(); ++n) {
        TensorLayout L(truncate_geq(inst.S, 1), inst.Y, n + 1);
        for (const auto& blk : L.blocks()) {
            if (blk.right_degree != 0 || blk.left_degree < 2)
                continue;
            PolyMatrix f = b.Phi.at(n);
            for (std::size_t r = 0; r < f.rows(); ++r)
                for (std::size_t c = blk.offset; c < blk.offset + blk.left_rank * blk.right_rank; ++c)
                    CHECK(f(r, c).is_zero());
        }
    }
}

TEST_CASE("cone of Phi for I' = <x^2>, I = <x>, J = <y>")
{
    RingSpec R = RingSpec::with_blocks({"x"}, {"y"});
    FiberInstance inst = FiberInstance::from_blocks(Id(R, "x^2"), MonomialIdeal::zero(R));
    FiberBuild b = build_fiber(inst);
    ChainComplex C = b.cone_phi;
    CHECK(C.rank(0) == 1);
    CHECK(C.rank(1) == 2);
    CHECK(C.rank(2) == 1);
    HomologyReport rep = homology_dims(C, 6);
    CHECK(rep.exact_in_positive);
    CHECK(rep.h0_hilbert == to_i64(hilbert_function(Id(R, "x^2,x*y"), 6)));
    CHECK(generator_table(C) == graded_betti(minimize(taylor(Id(R, "x^2,x*y")))));
    // no J' part: the full cone is Cone(Phi)
    CHECK(b.resolution.total_rank() == C.total_rank());
}

TEST_CASE("I' = I collapses Cone(Phi) to a resolution of R/I and breaks minimality")
{
    RingSpec R = RingSpec::with_blocks({"x"}, {"y"});
    FiberInstance inst = FiberInstance::from_blocks(Id(R, "x"), Id(R, "y^2"));
    FiberBuild b = build_fiber(inst);
    HomologyReport rep = homology_dims(b.cone_phi, 5);
    CHECK(rep.exact_in_positive);
    CHECK(rep.h0_hilbert == to_i64(hilbert_function(Id(R, "x"), 5)));
    MinimalityCertificate c = certify_minimal(inst, b);
    CHECK_FALSE(c.ip_in_i_squared);
    CHECK_FALSE(c.hypotheses);
    CHECK_FALSE(c.is_minimal);
    CHECK(b.Phi.at(1).has_unit_entry());
    HomologyReport full = homology_dims(b.resolution, 5);
    CHECK(full.exact_in_positive);
    CHECK(full.h0_hilbert == to_i64(hilbert_function(inst.target_ideal(), 5)));
}

TEST_CASE("I' = <x^3> passes both halves of the certificate")
{
    RingSpec R = RingSpec::with_blocks({"x"}, {"y"});
    FiberInstance inst = FiberInstance::from_blocks(Id(R, "x^3"), Id(R, "y^2"));
    FiberBuild b = build_fiber(inst);
    MinimalityCertificate c = certify_minimal(inst, b);
    CHECK(c.hypotheses);
    CHECK(c.is_minimal);
}

TEST_CASE("zero I' and J' give the star product")
{
    RingSpec R = RingSpec::with_blocks({"x1", "x2"}, {"y1", "y2"});
    FiberInstance inst = FiberInstance::from_blocks(MonomialIdeal::zero(R), MonomialIdeal::zero(R));
    FiberBuild b = build_fiber(inst);
    CHECK(b.resolution == b.star);
}

TEST_CASE("omega is Phi padded when J' = 0")
{
    RingSpec R = RingSpec::with_blocks({"x1"}, {"y1", "y2"});
    FiberInstance inst = FiberInstance::from_blocks(Id(R, "x1^3"), MonomialIdeal::zero(R));
    FiberBuild b = build_fiber(inst);
    for (const auto& [n, m] : b.Phi.matrices())
        CHECK(b.Omega.at(n).block(0, 0, m.rows(), m.cols()) == m);
    CHECK(b.Psi.source().is_zero());
}

TEST_CASE("symmetry of the construction")
{
    RingSpec R = RingSpec::with_blocks({"x1", "x2"}, {"y1"});
    RingSpec Rs = RingSpec::with_blocks({"y1"}, {"x1", "x2"});
    FiberInstance a = FiberInstance::from_blocks(Id(R, "x1^2,x2^3"), Id(R, "y1^2"));
    FiberInstance s = FiberInstance::from_blocks(Id(Rs, "y1^2"), Id(Rs, "x1^2,x2^3"));
    FiberBuild ba = build_fiber(a), bs = build_fiber(s);
    for (int n = 0; n <= 4; ++n) {
        CHECK(ba.Phi.source().rank(n) == bs.Psi.source().rank(n));
        CHECK(ba.Psi.source().rank(n) == bs.Phi.source().rank(n));
        CHECK(ba.resolution.rank(n) == bs.resolution.rank(n));
    }
}

TEST_CASE("Cone(Omega) rank decomposition and formula, m = n = 2")
{
    RingSpec R = block_ring(2, 2);
    FiberInstance inst = FiberInstance::from_blocks(Id(R, "x1^2,x2^2"), Id(R, "y1^2,y2^2"));
    FiberBuild b = build_fiber(inst);
    BettiTable k2 = BettiTable::from_totals({1, 2, 1});
    for (int l = 1; l <= 4; ++l) {
        CHECK(static_cast<std::int64_t>(b.resolution.rank(l)) == betti_fiber(l, 2, 2, k2, k2));
        CHECK(b.resolution.rank(l) == b.star.rank(l) + b.Phi.source().rank(l - 1) + b.Psi.source().rank(l - 1));
    }
}

TEST_CASE("the Phi source resolves (I' + IJ)/IJ")
{
    RingSpec R = RingSpec::with_blocks({"x1", "x2"}, {"y1"});
    FiberInstance inst = FiberInstance::from_blocks(Id(R, "x1^2,x1*x2^2"), Id(R, "y1^3"));
    ChainComplex src = phi_source(inst.S, inst.Y);
    HomologyReport rep = homology_dims(src, 8);
    CHECK(rep.exact_in_positive);
    MonomialIdeal IJ = ideal_product(inst.I, inst.J);
    auto big = hilbert_function(IJ, 8), small = hilbert_function(ideal_sum(inst.Ip, IJ), 8);
    for (int d = 0; d <= 8; ++d)
        CHECK(rep.h0_hilbert[d] == static_cast<std::int64_t>(big[d] - small[d]));
}

TEST_CASE("randomized instances: chain maps, exactness, minimality, constrained lifts")
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        RandomInstance ri = random_instance(rng, 2, 3, 3);
        const FiberInstance& inst = ri.inst;
        FiberBuild b = build_fiber(inst);
        CHECK(is_chain_map(b.Phi));
        CHECK(is_chain_map(b.Psi));
        CHECK(b.phi_lift.constrained);
        CHECK(b.psi_lift.constrained);
        CHECK(entries_in(b.phi_lift.phi, inst.I));
        CHECK(entries_in(b.psi_lift.phi, inst.J));
        MinimalityCertificate c = certify_minimal(inst, b);
        CHECK(c.hypotheses);
        CHECK(c.is_minimal);
        const int D = default_degree_bound(inst);
        HomologyReport rep = homology_dims(b.resolution, D);
        CHECK(rep.exact_in_positive);
        CHECK(rep.h0_hilbert == to_i64(hilbert_function(inst.target_ideal(), D)));
        TorCertificate t = certify_tor_independence(inst, D);
        CHECK(t.mode == TorMode::Structural);
        CHECK(t.independent);
    }
}

TEST_CASE("unconstrained lifts still give resolutions")
{
    RingSpec R = block_ring(2, 1);
    FiberInstance inst = FiberInstance::from_blocks(Id(R, "x1^2,x1*x2,x2^3"), Id(R, "y1^2"));
    FiberBuild b = build_fiber(inst, false);
    CHECK_FALSE(b.phi_lift.constrained);
    CHECK(is_chain_map(b.Phi));
    HomologyReport rep = homology_dims(b.resolution, default_degree_bound(inst));
    CHECK(rep.exact_in_positive);
    CHECK_FALSE(certify_minimal(inst, b).hypotheses);
}

TEST_CASE("explicit instances and hypothesis errors")
{
    RingSpec R({"x", "y", "z"});
    CHECK_THROWS_AS(FiberInstance::from_ideals(Id(R, "y"), Id(R, "x"), Id(R, "z^2"), Id(R, "z")).validate(),
                    HypothesisError);
    // shared variable: Tor-independence has to be computed and fails
    FiberInstance bad = FiberInstance::from_ideals(MonomialIdeal::zero(R), Id(R, "x"), MonomialIdeal::zero(R), Id(R, "x*y"));
    TorCertificate t = certify_tor_independence(bad, default_degree_bound(bad));
    CHECK(t.mode == TorMode::Bounded);
    CHECK_FALSE(t.independent);
    CHECK(t.failing_pair == "{I, J}");

    // explicit but disjoint: general quotient R/<I', IJ, J'>
    FiberInstance ok = FiberInstance::from_ideals(Id(R, "x^2"), Id(R, "x"), Id(R, "y^2*z, y*z^2"), Id(R, "y*z"));
    FiberBuild b = build_fiber(ok);
    HomologyReport rep = homology_dims(b.resolution, default_degree_bound(ok));
    CHECK(rep.exact_in_positive);
    CHECK(rep.h0_hilbert == to_i64(hilbert_function(ok.target_ideal(), default_degree_bound(ok))));
}

TEST_CASE("rational field")
{
    RingSpec R = RingSpec::with_blocks({"x1", "x2"}, {"y1"}, Field::rationals());
    FiberInstance inst = FiberInstance::from_blocks(Id(R, "x1^2,x1*x2,x2^2"), Id(R, "y1^2"));
    FiberBuild b = build_fiber(inst);
    CHECK(is_chain_map(b.Phi));
    CHECK(certify_minimal(inst, b).is_minimal);
    HomologyReport rep = homology_dims(b.resolution, default_degree_bound(inst));
    CHECK(rep.exact_in_positive);
    // same Betti table as over F_p
    RingSpec Rp = RingSpec::with_blocks({"x1", "x2"}, {"y1"});
    FiberInstance instp = FiberInstance::from_blocks(Id(Rp, "x1^2,x1*x2,x2^2"), Id(Rp, "y1^2"));
    CHECK(graded_betti(b.resolution) == graded_betti(fiber_resolution(instp)));
}
