#include "fiberres/homcheck.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "linalg.hpp"

namespace fiberres {

namespace {

using BasisKey = std::pair<std::size_t, std::vector<int>>;

std::vector<Monomial> standard_monomials(std::size_t nvars, int deg, const MonomialIdeal* q)
{
    if (deg < 0)
        return {};
    auto all = monomials_of_degree(nvars, deg);
    if (!q || q->is_zero())
        return all;
    std::vector<Monomial> out;
    for (auto& m : all)
        if (!q->contains(m))
            out.push_back(std::move(m));
    return out;
}

std::size_t piece_dim(const ChainComplex& C, int n, int d, const MonomialIdeal* q,
                      std::map<int, std::size_t>& cache_by_degree)
{
    std::size_t s = 0;
    for (int tw : C.module(n).twists()) {
        int e = d - tw;
        if (e < 0)
            continue;
        auto it = cache_by_degree.find(e);
        if (it == cache_by_degree.end())
            it = cache_by_degree.emplace(e, standard_monomials(C.ring().nvars(), e, q).size()).first;
        s += it->second;
    }
    return s;
}

template <class Ops>
std::size_t rank_of_columns(const Ops& ops, const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& cols)
{
    std::vector<detail::SparseRow<Ops>> rows;
    rows.reserve(cols.size());
    for (const auto& c : cols) {
        detail::SparseRow<Ops> r;
        r.reserve(c.size());
        for (const auto& [i, v] : c)
            r.emplace_back(i, ops.from(v));
        rows.push_back(std::move(r));
    }
    return detail::sparse_rank(ops, std::move(rows));
}

// Strand of the complex in fine degree A: ranks and dimensions per homological degree.
struct Strand {
    std::map<int, std::size_t> dim;
    std::map<int, std::size_t> rank;
};

Strand strand_at(const ChainComplex& C, const Monomial& A, const MonomialIdeal* q)
{
    Strand s;
    std::map<int, std::vector<std::size_t>> gens;
    std::map<int, std::map<std::size_t, std::size_t>> pos;
    for (int n : C.degrees()) {
        const auto& md = C.module(n).multidegrees();
        auto& g = gens[n];
        for (std::size_t i = 0; i < md.size(); ++i)
            if (md[i].divides(A) && (!q || !q->contains(A / md[i]))) {
                pos[n][i] = g.size();
                g.push_back(i);
            }
        s.dim[n] = g.size();
    }
    const Field& k = C.ring().field();
    for (int n : C.degrees()) {
        const auto& src = gens[n];
        auto tit = gens.find(n - 1);
        if (src.empty() || tit == gens.end() || tit->second.empty())
            continue;
        const PolyMatrix& d = C.differential(n);
        const auto& tpos = pos[n - 1];
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
        for (std::size_t c : src) {
            std::vector<std::pair<std::size_t, Scalar>> col;
            for (const auto& [r, idx] : tpos)
                if (!d(r, c).is_zero())
                    col.emplace_back(idx, d(r, c).terms()[0].coeff);
            cols.push_back(std::move(col));
        }
        s.rank[n] = detail::with_field_ops(k, [&](const auto& ops) { return rank_of_columns(ops, cols); });
    }
    return s;
}

Monomial lcm_of_all(const ChainComplex& C)
{
    Monomial L = Monomial::one(C.ring().nvars());
    for (int n : C.degrees())
        for (const auto& m : C.module(n).multidegrees())
            L = lcm(L, m);
    return L;
}

void finish_report(HomologyReport& rep, const std::map<std::pair<int, int>, std::int64_t>& chain_dims, int dlo)
{
    for (int d = dlo; d <= rep.degree_bound; ++d) {
        std::int64_t chi_c = 0, chi_h = 0;
        for (const auto& [nd, v] : chain_dims)
            if (nd.second == d)
                chi_c += (nd.first % 2 == 0 ? 1 : -1) * v;
        for (const auto& [nd, v] : rep.dims)
            if (nd.second == d)
                chi_h += (nd.first % 2 == 0 ? 1 : -1) * v;
        if (chi_c != chi_h)
            rep.euler_ok = false;
    }
    rep.h0_hilbert.assign(static_cast<std::size_t>(std::max(rep.degree_bound, -1) + 1), 0);
    for (const auto& [nd, v] : rep.dims) {
        if (v < 0)
            rep.consistent = false;
        if (nd.first > 0 && v != 0)
            rep.exact_in_positive = false;
        if (nd.first == 0 && nd.second >= 0 && nd.second <= rep.degree_bound)
            rep.h0_hilbert[static_cast<std::size_t>(nd.second)] = v;
    }
}

HomologyReport homology_general(const ChainComplex& C, int d_max, const MonomialIdeal* q)
{
    HomologyReport rep;
    rep.degree_bound = d_max;
    std::map<std::pair<int, int>, std::int64_t> chain_dims;
    int dlo = 0;
    for (int n : C.degrees())
        for (int tw : C.module(n).twists())
            dlo = std::min(dlo, tw);
    std::map<int, std::size_t> dim_cache;
    for (int d = dlo; d <= d_max; ++d) {
        std::map<int, std::size_t> rk;
        for (int n : C.degrees())
            if (C.rank(n - 1) > 0)
                rk[n] = rank(graded_piece(C, n, d, q), C.ring().field());
        for (int n : C.degrees()) {
            auto dim = static_cast<std::int64_t>(piece_dim(C, n, d, q, dim_cache));
            chain_dims[{n, d}] = dim;
            std::int64_t h = dim - static_cast<std::int64_t>(rk.count(n) ? rk[n] : 0) -
                             static_cast<std::int64_t>(rk.count(n + 1) ? rk[n + 1] : 0);
            if (h != 0)
                rep.dims[{n, d}] = h;
        }
    }
    finish_report(rep, chain_dims, dlo);
    return rep;
}

HomologyReport homology_multigraded(const ChainComplex& C, int d_max, const MonomialIdeal* q)
{
    HomologyReport rep;
    rep.degree_bound = d_max;
    rep.multigraded = true;
    std::map<std::pair<int, int>, std::int64_t> chain_dims;
    const Monomial L = lcm_of_all(C);
    const std::size_t N = C.ring().nvars();

    // Strands only depend on A through gcd(A, L) when nothing is reduced away.
    Monomial L2 = L;
    if (q && !q->is_zero())
        for (int n : C.degrees())
            for (const auto& m : C.module(n).multidegrees())
                for (const auto& j : q->generators())
                    L2 = lcm(L2, m * j);
    std::map<std::vector<int>, Strand> memo;

    for (int d = 0; d <= d_max; ++d) {
        for (const auto& A : monomials_of_degree(N, d)) {
            Monomial key = gcd(A, L2);
            auto it = memo.find(key.exponents());
            if (it == memo.end()) {
                // homology in fine degree A only sees the part of A dividing L2
                it = memo.emplace(key.exponents(), strand_at(C, key, q)).first;
            }
            const Strand& s = it->second;
            for (const auto& [n, dim] : s.dim) {
                if (dim == 0)
                    continue;
                auto r_in = s.rank.count(n) ? s.rank.at(n) : 0;
                auto r_out = s.rank.count(n + 1) ? s.rank.at(n + 1) : 0;
                chain_dims[{n, d}] += static_cast<std::int64_t>(dim);
                auto h = static_cast<std::int64_t>(dim) - static_cast<std::int64_t>(r_in + r_out);
                if (h != 0)
                    rep.dims[{n, d}] += h;
            }
        }
    }
    finish_report(rep, chain_dims, 0);
    rep.complete = d_max >= L2.degree();
    return rep;
}

} // namespace

GradedPiece graded_piece(const ChainComplex& C, int n, int d, const MonomialIdeal* quotient)
{
    GradedPiece P;
    const std::size_t N = C.ring().nvars();
    std::map<BasisKey, std::size_t> row_index;
    const auto& tw_t = C.module(n - 1).twists();
    for (std::size_t i = 0; i < tw_t.size(); ++i)
        for (auto& m : standard_monomials(N, d - tw_t[i], quotient)) {
            row_index.emplace(BasisKey{i, m.exponents()}, P.target.size());
            P.target.push_back({i, std::move(m)});
        }
    const auto& tw_s = C.module(n).twists();
    for (std::size_t j = 0; j < tw_s.size(); ++j)
        for (auto& m : standard_monomials(N, d - tw_s[j], quotient))
            P.source.push_back({j, std::move(m)});
    if (P.target.empty()) {
        P.columns.assign(P.source.size(), {});
        return P;
    }
    const PolyMatrix& D = C.differential(n);
    for (const auto& [j, mu] : P.source) {
        std::map<std::size_t, Scalar> acc;
        for (std::size_t i = 0; i < tw_t.size(); ++i)
            for (const auto& t : D(i, j).terms()) {
                Monomial m = t.mono * mu;
                auto it = row_index.find(BasisKey{i, m.exponents()});
                if (it == row_index.end())
                    continue; // reduced to zero modulo the quotient
                auto [a, fresh] = acc.emplace(it->second, t.coeff);
                if (!fresh)
                    a->second += t.coeff;
            }
        std::vector<std::pair<std::size_t, Scalar>> col;
        for (auto& [r, v] : acc)
            if (!v.is_zero())
                col.emplace_back(r, v);
        P.columns.push_back(std::move(col));
    }
    return P;
}

std::size_t rank(const GradedPiece& P, const Field& k)
{
    return detail::with_field_ops(k, [&](const auto& ops) { return rank_of_columns(ops, P.columns); });
}

std::int64_t HomologyReport::dim(int i, int d) const
{
    auto it = dims.find({i, d});
    return it == dims.end() ? 0 : it->second;
}

HomologyReport homology_dims(const ChainComplex& C, int d_max, const HomologyOptions& opts)
{
    const MonomialIdeal* q = opts.quotient ? &*opts.quotient : nullptr;
    if (q && !(q->ring() == C.ring()))
        throw RingMismatch();
    if (!opts.force_general && C.has_multidegrees())
        return homology_multigraded(C, d_max, q);
    return homology_general(C, d_max, q);
}

HomologyReport tor_dims(const ChainComplex& X, const MonomialIdeal& J, int d_max)
{
    HomologyOptions o;
    o.quotient = J;
    return homology_dims(X, d_max, o);
}

std::vector<std::size_t> complex_support(const ChainComplex& C)
{
    std::set<std::size_t> s;
    for (int n : C.degrees()) {
        const PolyMatrix& d = C.differential(n);
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                for (const auto& t : d(i, j).terms())
                    for (auto v : t.mono.support())
                        s.insert(v);
    }
    return {s.begin(), s.end()};
}

bool structurally_tor_independent(const ChainComplex& X, const MonomialIdeal& J)
{
    auto a = complex_support(X);
    auto b = J.support();
    std::vector<std::size_t> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both.empty();
}

bool is_tor_independent(const ChainComplex& X, const MonomialIdeal& J, int d_max)
{
    if (structurally_tor_independent(X, J))
        return true;
    return tor_dims(X, J, d_max).exact_in_positive;
}

std::optional<int> multigraded_complete_bound(const ChainComplex& C)
{
    if (!C.has_multidegrees())
        return std::nullopt;
    return lcm_of_all(C).degree();
}

std::optional<ChainComplex> infer_multidegrees(const ChainComplex& C)
{
    if (C.is_zero())
        return std::nullopt;
    if (C.has_multidegrees())
        return C;
    const std::size_t N = C.ring().nvars();
    std::map<int, GradedFreeModule> mods;
    std::map<int, PolyMatrix> diffs;
    const int lo = C.min_degree();
    std::vector<Monomial> below;
    for (int n = lo; n <= C.max_degree(); ++n) {
        const auto& M = C.module(n);
        const PolyMatrix& d = C.differential(n);
        std::vector<Monomial> md;
        for (std::size_t j = 0; j < M.rank(); ++j) {
            std::optional<Monomial> m;
            if (n == lo) {
                if (M.twist(j) == 0)
                    m = Monomial::one(N);
            } else {
                for (std::size_t i = 0; i < d.rows() && !m; ++i)
                    if (d(i, j).is_term())
                        m = below[i] * d(i, j).terms()[0].mono;
            }
            if (!m)
                return std::nullopt;
            md.push_back(*m);
        }
        if (!M.is_zero()) {
            try {
                mods.emplace(n, GradedFreeModule(M.twists(), md));
            } catch (const ComplexError&) {
                return std::nullopt;
            }
        }
        below = std::move(md);
    }
    for (int n = lo; n <= C.max_degree() + 1; ++n)
        diffs.emplace(n, C.differential(n));
    ChainComplex out(C.ring(), std::move(mods), std::move(diffs));
    if (!out.has_multidegrees())
        return std::nullopt;
    return out;
}

} // namespace fiberres
