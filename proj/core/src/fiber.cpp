#include "fiberres/fiber.hpp"

#include <algorithm>

#include "fiberres/resolutions.hpp"
#include "fiberres/star.hpp"
#include "linalg.hpp"

namespace fiberres {

namespace {

void check_augmented(const ChainComplex& C, const std::string& name)
{
    if (C.is_zero() || C.min_degree() != 0 || C.rank(0) != 1 || C.module(0).twist(0) != 0)
        throw ComplexError(name + " must have R in degree 0 and nothing below");
}

bool odd(int n) { return (n % 2) != 0; }

// H_0(S) -> H_0(X) needs the image of d_1^S inside the ideal generated by d_1^X.
void check_h0_map(const ChainComplex& S, const ChainComplex& X)
{
    const PolyMatrix& dX = X.differential(1);
    std::vector<Monomial> gens;
    for (std::size_t j = 0; j < dX.cols(); ++j) {
        const Polynomial& p = dX(0, j);
        if (p.is_zero())
            continue;
        if (!p.is_term())
            return; // not decidable without Gröbner bases; the solve will tell
        gens.push_back(p.terms()[0].mono);
    }
    MonomialIdeal I(X.ring(), gens);
    const PolyMatrix& dS = S.differential(1);
    for (std::size_t j = 0; j < dS.cols(); ++j)
        if (!ideal_membership(dS(0, j), I))
            throw HypothesisError("containment violated: " + dS(0, j).to_string(S.ring()) + " is not in " +
                                  I.to_string());
}

using Key = std::pair<std::size_t, std::vector<int>>;

// One generator: find v in X_j with d^X_j v = rhs.
template <class Ops>
std::optional<std::vector<Polynomial>> solve_generator(const Ops& ops, const ChainComplex& X, int j,
                                                       const std::vector<Polynomial>& rhs, int degree,
                                                       const std::optional<Monomial>& fine,
                                                       const MonomialIdeal* constrain)
{
    const RingSpec& ring = X.ring();
    const std::size_t N = ring.nvars();
    const GradedFreeModule& M = X.module(j);
    const PolyMatrix& d = X.differential(j);

    // unknowns (a, mu), generator-major, mu grlex descending
    std::vector<std::pair<std::size_t, Monomial>> unknowns;
    for (std::size_t a = 0; a < M.rank(); ++a) {
        int e = degree - M.twist(a);
        if (e < 0)
            continue;
        if (fine) {
            const Monomial& ma = M.multidegrees()[a];
            if (!ma.divides(*fine))
                continue;
            Monomial mu = *fine / ma;
            if (!constrain || constrain->contains(mu))
                unknowns.emplace_back(a, std::move(mu));
            continue;
        }
        for (auto& mu : monomials_of_degree(N, e))
            if (!constrain || constrain->contains(mu))
                unknowns.emplace_back(a, std::move(mu));
    }

    std::map<Key, std::size_t> row_of;
    std::vector<std::map<std::size_t, typename Ops::value_type>> rows;
    auto row_index = [&](std::size_t i, const Monomial& m) {
        auto [it, fresh] = row_of.emplace(Key{i, m.exponents()}, rows.size());
        if (fresh)
            rows.emplace_back();
        return it->second;
    };
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const auto& [a, mu] = unknowns[u];
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (const auto& t : d(i, a).terms()) {
                auto r = row_index(i, t.mono * mu);
                auto [it, fresh] = rows[r].emplace(u, ops.from(t.coeff));
                if (!fresh)
                    it->second = ops.add(it->second, ops.from(t.coeff));
            }
    }
    std::vector<typename Ops::value_type> b(rows.size(), typename Ops::value_type(0));
    for (std::size_t i = 0; i < rhs.size(); ++i)
        for (const auto& t : rhs[i].terms()) {
            auto r = row_index(i, t.mono);
            if (b.size() < rows.size())
                b.resize(rows.size(), typename Ops::value_type(0));
            b[r] = ops.add(b[r], ops.from(t.coeff));
        }
    b.resize(rows.size(), typename Ops::value_type(0));

    std::vector<detail::SparseRow<Ops>> A;
    A.reserve(rows.size());
    for (auto& r : rows) {
        detail::SparseRow<Ops> sr;
        for (auto& [c, v] : r)
            if (!Ops::is_zero(v))
                sr.emplace_back(c, v);
        A.push_back(std::move(sr));
    }
    auto x = detail::sparse_solve(ops, std::move(A), b, unknowns.size());
    if (!x)
        return std::nullopt;
    std::vector<Polynomial> v(M.rank());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (!Ops::is_zero((*x)[u]))
            v[unknowns[u].first] += Polynomial::term(unknowns[u].second, ops.to((*x)[u], ring.field()));
    return v;
}

std::string deg_str(int n) { return std::to_string(n); }

} // namespace

LiftReport lift_chain_map(const ChainComplex& S, const ChainComplex& X, const std::optional<MonomialIdeal>& constrain_to)
{
    if (!(S.ring() == X.ring()))
        throw RingMismatch();
    check_augmented(S, "source");
    check_augmented(X, "target");
    check_h0_map(S, X);
    const RingSpec& ring = S.ring();
    const bool fine = S.has_multidegrees() && X.has_multidegrees();
    const MonomialIdeal* constrain = constrain_to ? &*constrain_to : nullptr;

    std::map<int, PolyMatrix> phi;
    phi.emplace(0, PolyMatrix::identity(1, ring));
    for (int j = 1; j <= S.max_degree(); ++j) {
        const PolyMatrix& dS = S.differential(j);
        const PolyMatrix& prev = phi.at(j - 1);
        PolyMatrix cur(X.rank(j), S.rank(j));
        for (std::size_t g = 0; g < S.rank(j); ++g) {
            std::vector<Polynomial> rhs(X.rank(j - 1));
            for (std::size_t i = 0; i < rhs.size(); ++i)
                for (std::size_t k = 0; k < dS.rows(); ++k)
                    if (!prev(i, k).is_zero() && !dS(k, g).is_zero())
                        rhs[i] += prev(i, k) * dS(k, g);
            const bool rhs_zero = std::all_of(rhs.begin(), rhs.end(), [](const Polynomial& p) { return p.is_zero(); });
            if (X.rank(j) == 0) {
                if (!rhs_zero)
                    throw LiftError("no lift in homological degree " + deg_str(j) + ": target module is zero");
                continue;
            }
            if (rhs_zero)
                continue;
            std::optional<Monomial> A;
            if (fine)
                A = S.module(j).multidegrees()[g];
            auto v = detail::with_field_ops(ring.field(), [&](const auto& ops) {
                return solve_generator(ops, X, j, rhs, S.module(j).twist(g), A, constrain);
            });
            if (!v)
                throw LiftError("no lift for generator " + std::to_string(g) + " in homological degree " +
                                deg_str(j) + (constrain ? " inside " + constrain->to_string() : std::string()));
            for (std::size_t a = 0; a < v->size(); ++a)
                cur(a, g) = std::move((*v)[a]);
        }
        phi.emplace(j, std::move(cur));
    }
    LiftReport rep;
    rep.constrained = constrain != nullptr;
    rep.max_degree_lifted = S.max_degree();
    rep.phi = ChainMap(S, X, std::move(phi));
    return rep;
}

ChainComplex phi_source(const ChainComplex& S, const ChainComplex& Y)
{
    return suspension(tensor(truncate_geq(S, 1), Y), -1);
}

ChainComplex psi_source(const ChainComplex& X, const ChainComplex& T)
{
    return suspension(tensor(X, truncate_geq(T, 1)), -1);
}

ChainMap build_phi(const ChainMap& phi, const ChainComplex& S, const ChainComplex& Y, const ChainComplex& starXY)
{
    const ChainComplex& X = phi.target();
    if (!(phi.source().ring() == S.ring()) || phi.source().rank(0) != S.rank(0))
        throw ComplexError("lift does not start at S");
    const ChainComplex S1 = truncate_geq(S, 1);
    ChainComplex src = phi_source(S, Y);
    std::map<int, PolyMatrix> mats;
    const PolyMatrix& dS1 = S.differential(1);
    for (int n : src.degrees()) {
        TensorLayout L(S1, Y, n + 1);
        if (L.size() != src.rank(n))
            throw ComplexError("shape mismatch in Φ source");
        PolyMatrix m(starXY.rank(n), L.size());
        for (const auto& blk : L.blocks()) {
            const int i = blk.left_degree, j = blk.right_degree;
            const PolyMatrix f = phi.at(i);
            for (std::size_t al = 0; al < blk.left_rank; ++al)
                for (std::size_t be = 0; be < blk.right_rank; ++be) {
                    const std::size_t col = blk.offset + al * blk.right_rank + be;
                    if (j > 0) {
                        for (std::size_t a = 0; a < f.rows(); ++a)
                            if (!f(a, al).is_zero())
                                m(star_index(X, Y, i, j, a, be), col) += odd(i + j) ? -f(a, al) : f(a, al);
                    } else if (i == 1) {
                        m(0, col) = dS1(0, al);
                    }
                }
        }
        mats.emplace(n, std::move(m));
    }
    return ChainMap(std::move(src), starXY, std::move(mats));
}

ChainMap build_psi(const ChainMap& psi, const ChainComplex& X, const ChainComplex& T, const ChainComplex& starXY)
{
    const ChainComplex& Y = psi.target();
    if (!(psi.source().ring() == T.ring()) || psi.source().rank(0) != T.rank(0))
        throw ComplexError("lift does not start at T");
    const ChainComplex T1 = truncate_geq(T, 1);
    ChainComplex src = psi_source(X, T);
    std::map<int, PolyMatrix> mats;
    const PolyMatrix& dT1 = T.differential(1);
    for (int n : src.degrees()) {
        TensorLayout L(X, T1, n + 1);
        if (L.size() != src.rank(n))
            throw ComplexError("shape mismatch in Ψ source");
        PolyMatrix m(starXY.rank(n), L.size());
        for (const auto& blk : L.blocks()) {
            const int i = blk.left_degree, j = blk.right_degree;
            const PolyMatrix f = psi.at(j);
            for (std::size_t al = 0; al < blk.left_rank; ++al)
                for (std::size_t be = 0; be < blk.right_rank; ++be) {
                    const std::size_t col = blk.offset + al * blk.right_rank + be;
                    if (i > 0) {
                        for (std::size_t b = 0; b < f.rows(); ++b)
                            if (!f(b, be).is_zero())
                                m(star_index(X, Y, i, j, al, b), col) += odd(i + j - 1) ? -f(b, be) : f(b, be);
                    } else if (j == 1) {
                        m(0, col) = dT1(0, be);
                    }
                }
        }
        mats.emplace(n, std::move(m));
    }
    return ChainMap(std::move(src), starXY, std::move(mats));
}

ChainMap omega(const ChainMap& Phi, const ChainMap& Psi)
{
    if (!(Phi.target() == Psi.target()))
        throw ComplexError("Φ and Ψ have different targets");
    ChainComplex src = direct_sum(Phi.source(), Psi.source());
    std::map<int, PolyMatrix> mats;
    for (int n : src.degrees()) {
        PolyMatrix a = Phi.at(n), b = Psi.at(n);
        PolyMatrix m(Phi.target().rank(n), a.cols() + b.cols());
        if (m.rows() == 0)
            continue;
        if (a.cols() > 0)
            m.set_block(0, 0, a);
        if (b.cols() > 0)
            m.set_block(0, a.cols(), b);
        mats.emplace(n, std::move(m));
    }
    return ChainMap(std::move(src), Phi.target(), std::move(mats));
}

FiberInstance FiberInstance::from_ideals(const MonomialIdeal& Ip, const MonomialIdeal& I, const MonomialIdeal& Jp,
                                         const MonomialIdeal& J)
{
    const RingSpec& ring = I.ring();
    if (!(Ip.ring() == ring) || !(Jp.ring() == ring) || !(J.ring() == ring))
        throw RingMismatch();
    FiberInstance inst{ring, Ip, I, Jp, J, {}, {}, {}, {}};
    if (!I.contains(Ip))
        throw HypothesisError("containment violated: I' = " + Ip.to_string() + " is not inside I = " + I.to_string());
    if (!J.contains(Jp))
        throw HypothesisError("containment violated: J' = " + Jp.to_string() + " is not inside J = " + J.to_string());
    inst.X = resolution_of(I);
    inst.Y = resolution_of(J);
    inst.S = resolution_of(Ip);
    inst.T = resolution_of(Jp);
    inst.validate();
    return inst;
}

FiberInstance FiberInstance::from_blocks(const MonomialIdeal& Ip, const MonomialIdeal& Jp)
{
    const RingSpec& ring = Ip.ring();
    if (!ring.partition())
        throw std::invalid_argument("ring has no variable blocks");
    return from_ideals(Ip, MonomialIdeal::of_variables(ring, ring.block_a_indices()), Jp,
                       MonomialIdeal::of_variables(ring, ring.block_b_indices()));
}

void FiberInstance::validate() const
{
    if (!I.contains(Ip))
        throw HypothesisError("containment violated: I' = " + Ip.to_string() + " is not inside I = " + I.to_string());
    if (!J.contains(Jp))
        throw HypothesisError("containment violated: J' = " + Jp.to_string() + " is not inside J = " + J.to_string());
    const std::pair<const ChainComplex*, const char*> parts[] = {{&X, "X"}, {&Y, "Y"}, {&S, "S"}, {&T, "T"}};
    for (const auto& [C, name] : parts) {
        if (!(C->ring() == ring))
            throw RingMismatch();
        check_augmented(*C, name);
        if (!is_complex(*C))
            throw ComplexError(std::string(name) + " fails d^2 = 0");
    }
}

MonomialIdeal FiberInstance::target_ideal() const
{
    return ideal_sum(ideal_sum(Ip, ideal_product(I, J)), Jp);
}

bool constrained_lift_applicable(const MonomialIdeal& Ip, const MonomialIdeal& I)
{
    return is_regular_sequence_monomials(I.generators()) && ideal_product(I, I).contains(Ip);
}

FiberBuild build_fiber(const FiberInstance& inst, bool constrained_lift)
{
    FiberBuild b;
    b.star = star_product(inst.X, inst.Y);
    auto side = [&](const MonomialIdeal& small, const MonomialIdeal& big) -> std::optional<MonomialIdeal> {
        if (constrained_lift && constrained_lift_applicable(small, big))
            return big;
        return std::nullopt;
    };
    b.phi_lift = lift_chain_map(inst.S, inst.X, side(inst.Ip, inst.I));
    b.psi_lift = lift_chain_map(inst.T, inst.Y, side(inst.Jp, inst.J));
    b.Phi = build_phi(b.phi_lift.phi, inst.S, inst.Y, b.star);
    b.Psi = build_psi(b.psi_lift.phi, inst.X, inst.T, b.star);
    b.Omega = omega(b.Phi, b.Psi);
    b.cone_phi = cone(b.Phi);
    b.cone_psi = cone(b.Psi);
    b.resolution = cone(b.Omega);
    return b;
}

ChainComplex fiber_resolution(const FiberInstance& inst, bool constrained_lift)
{
    return build_fiber(inst, constrained_lift).resolution;
}

ChainComplex cone_phi(const FiberInstance& inst, bool constrained_lift)
{
    return build_fiber(inst, constrained_lift).cone_phi;
}

ChainComplex cone_psi(const FiberInstance& inst, bool constrained_lift)
{
    return build_fiber(inst, constrained_lift).cone_psi;
}

MinimalityCertificate certify_minimal(const FiberInstance& inst, const FiberBuild& build)
{
    MinimalityCertificate c;
    c.regular_I = is_regular_sequence_monomials(inst.I.generators());
    c.regular_J = is_regular_sequence_monomials(inst.J.generators());
    c.ip_in_i_squared = ideal_product(inst.I, inst.I).contains(inst.Ip);
    c.jp_in_j_squared = ideal_product(inst.J, inst.J).contains(inst.Jp);
    c.inputs_minimal = is_minimal(inst.X) && is_minimal(inst.Y) && is_minimal(inst.S) && is_minimal(inst.T);
    c.constrained_lifts = build.phi_lift.constrained && build.psi_lift.constrained;
    c.hypotheses = c.regular_I && c.regular_J && c.ip_in_i_squared && c.jp_in_j_squared && c.inputs_minimal &&
                   c.constrained_lifts;
    c.is_minimal = is_minimal(build.resolution);
    return c;
}

TorCertificate certify_tor_independence(const FiberInstance& inst, int degree_bound)
{
    TorCertificate cert;
    cert.degree_bound = degree_bound;
    struct Pair {
        const ChainComplex* res;
        const MonomialIdeal* ideal;
        const char* name;
    };
    const Pair pairs[] = {{&inst.X, &inst.J, "{I, J}"}, {&inst.S, &inst.J, "{I', J}"}, {&inst.X, &inst.Jp, "{I, J'}"}};
    for (const auto& p : pairs)
        if (!structurally_tor_independent(*p.res, *p.ideal))
            cert.mode = TorMode::Bounded;
    if (cert.mode == TorMode::Structural)
        return cert;
    for (const auto& p : pairs)
        if (!is_tor_independent(*p.res, *p.ideal, degree_bound)) {
            cert.independent = false;
            cert.failing_pair = p.name;
            break;
        }
    return cert;
}

int default_degree_bound(const FiberInstance& inst)
{
    int gdeg = 0;
    for (const auto* I : {&inst.Ip, &inst.I, &inst.Jp, &inst.J})
        if (!I->is_zero())
            gdeg = std::max(gdeg, I->max_generator_degree());
    const int x = inst.X.max_degree(), y = inst.Y.max_degree();
    int length = x + y - 1;
    if (inst.S.max_degree() >= 1)
        length = std::max(length, inst.S.max_degree() + y);
    if (inst.T.max_degree() >= 1)
        length = std::max(length, x + inst.T.max_degree());
    return gdeg + std::max(length, 0) + 2;
}

} // namespace fiberres
