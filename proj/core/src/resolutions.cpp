#include "fiberres/resolutions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace fiberres {

namespace {

std::vector<std::size_t> without(const std::vector<std::size_t>& T, std::size_t k)
{
    std::vector<std::size_t> out;
    out.reserve(T.size() - 1);
    for (std::size_t j = 0; j < T.size(); ++j)
        if (j != k)
            out.push_back(T[j]);
    return out;
}

std::size_t subset_index(const std::vector<std::vector<std::size_t>>& level, const std::vector<std::size_t>& T)
{
    // lexicographic order makes binary search valid
    auto it = std::lower_bound(level.begin(), level.end(), T);
    return static_cast<std::size_t>(it - level.begin());
}

// Exterior complex on r symbols: coeff(T, k) is the entry for removing T[k].
template <class Twist, class Coeff>
ChainComplex subset_complex(const RingSpec& ring, std::size_t r, Twist twist_of, Coeff coeff,
                            const std::vector<std::vector<Monomial>>* mdeg)
{
    auto levels = subsets_by_size(r);
    std::map<int, GradedFreeModule> mods;
    std::map<int, PolyMatrix> diffs;
    for (std::size_t k = 0; k <= r; ++k) {
        std::vector<int> tw;
        for (const auto& T : levels[k])
            tw.push_back(twist_of(T));
        if (mdeg)
            mods.emplace(static_cast<int>(k), GradedFreeModule(std::move(tw), (*mdeg)[k]));
        else
            mods.emplace(static_cast<int>(k), GradedFreeModule(std::move(tw)));
    }
    for (std::size_t k = 1; k <= r; ++k) {
        PolyMatrix d(levels[k - 1].size(), levels[k].size());
        for (std::size_t j = 0; j < levels[k].size(); ++j) {
            const auto& T = levels[k][j];
            for (std::size_t p = 0; p < T.size(); ++p) {
                Polynomial c = coeff(T, p);
                d(subset_index(levels[k - 1], without(T, p)), j) = p % 2 == 0 ? c : -c;
            }
        }
        diffs.emplace(static_cast<int>(k), std::move(d));
    }
    return ChainComplex(ring, std::move(mods), std::move(diffs));
}

PolyMatrix drop(const PolyMatrix& m, std::optional<std::size_t> row, std::optional<std::size_t> col)
{
    std::size_t nr = m.rows() - (row ? 1 : 0), nc = m.cols() - (col ? 1 : 0);
    PolyMatrix out(nr, nc);
    for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
        if (row && i == *row)
            continue;
        for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
            if (col && j == *col)
                continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

template <class T>
std::vector<T> erase_at(std::vector<T> v, std::size_t i)
{
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    return v;
}

} // namespace

std::vector<std::vector<std::vector<std::size_t>>> subsets_by_size(std::size_t r)
{
    std::vector<std::vector<std::vector<std::size_t>>> levels(r + 1);
    for (std::size_t k = 0; k <= r; ++k) {
        std::vector<std::size_t> T(k);
        for (std::size_t i = 0; i < k; ++i)
            T[i] = i;
        while (true) {
            levels[k].push_back(T);
            // next combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && T[i - 1] == r - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++T[i - 1];
            for (std::size_t j = i; j < k; ++j)
                T[j] = T[j - 1] + 1;
        }
    }
    return levels;
}

ChainComplex koszul(const RingSpec& ring, const std::vector<Polynomial>& f)
{
    std::vector<int> deg;
    bool monomial = true;
    for (const auto& p : f) {
        if (p.is_zero())
            throw std::invalid_argument("Koszul complex on a zero element");
        auto d = p.homogeneous_degree();
        if (!d)
            throw std::invalid_argument("Koszul complex on non-homogeneous " + p.to_string(ring));
        deg.push_back(*d);
        monomial = monomial && p.is_term();
    }
    std::vector<std::vector<Monomial>> md;
    if (monomial) {
        for (const auto& level : subsets_by_size(f.size())) {
            md.emplace_back();
            for (const auto& T : level) {
                Monomial m = Monomial::one(ring.nvars());
                for (auto i : T)
                    m = m * f[i].terms()[0].mono;
                md.back().push_back(m);
            }
        }
    }
    return subset_complex(
        ring, f.size(),
        [&](const std::vector<std::size_t>& T) {
            int s = 0;
            for (auto i : T)
                s += deg[i];
            return s;
        },
        [&](const std::vector<std::size_t>& T, std::size_t p) { return f[T[p]]; }, monomial ? &md : nullptr);
}

ChainComplex koszul(const RingSpec& ring, const std::vector<Monomial>& f)
{
    std::vector<Polynomial> polys;
    for (const auto& m : f)
        polys.push_back(Polynomial::term(m, Scalar::one(ring.field())));
    return koszul(ring, polys);
}

ChainComplex taylor_from_generators(const RingSpec& ring, const std::vector<Monomial>& gens)
{
    if (gens.empty())
        throw std::invalid_argument("Taylor complex of the zero ideal");
    const Monomial one = Monomial::one(ring.nvars());
    auto lcm_of = [&](const std::vector<std::size_t>& T) {
        Monomial m = one;
        for (auto i : T)
            m = lcm(m, gens[i]);
        return m;
    };
    std::vector<std::vector<Monomial>> md;
    for (const auto& level : subsets_by_size(gens.size())) {
        md.emplace_back();
        for (const auto& T : level)
            md.back().push_back(lcm_of(T));
    }
    const Scalar c1 = Scalar::one(ring.field());
    return subset_complex(
        ring, gens.size(), [&](const std::vector<std::size_t>& T) { return lcm_of(T).degree(); },
        [&](const std::vector<std::size_t>& T, std::size_t p) {
            return Polynomial::term(lcm_of(T) / lcm_of(without(T, p)), c1);
        },
        &md);
}

ChainComplex taylor(const MonomialIdeal& I)
{
    return taylor_from_generators(I.ring(), I.generators());
}

ChainComplex minimize(const ChainComplex& C)
{
    if (C.is_zero())
        return C;
    const int lo = C.min_degree(), hi = C.max_degree();
    std::map<int, GradedFreeModule> mods;
    std::map<int, PolyMatrix> d;
    for (int n = lo; n <= hi; ++n)
        mods[n] = C.module(n);
    for (int n = lo; n <= hi + 1; ++n)
        d[n] = C.differential(n);

    auto remove_gen = [&](int n, std::size_t i) {
        const auto& M = mods[n];
        if (M.has_multidegrees())
            mods[n] = GradedFreeModule(erase_at(M.twists(), i), erase_at(M.multidegrees(), i));
        else
            mods[n] = GradedFreeModule(erase_at(M.twists(), i));
    };

    for (int n = lo + 1; n <= hi; ++n) {
        while (true) {
            PolyMatrix& m = d[n];
            std::optional<std::pair<std::size_t, std::size_t>> pivot;
            for (std::size_t r = 0; r < m.rows() && !pivot; ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (m(r, c).has_constant_term()) {
                        pivot = {r, c};
                        break;
                    }
            if (!pivot)
                break;
            auto [r, c] = *pivot;
            const Scalar uinv = m(r, c).terms()[0].coeff.inverse();
            PolyMatrix upd = m;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (i == r || m(i, c).is_zero())
                    continue;
                Polynomial a = uinv * m(i, c);
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (j != c && !m(r, j).is_zero())
                        upd(i, j) -= a * m(r, j);
            }
            d[n] = drop(upd, r, c);
            d[n + 1] = drop(d[n + 1], c, std::nullopt);
            d[n - 1] = drop(d[n - 1], std::nullopt, r);
            remove_gen(n, c);
            remove_gen(n - 1, r);
        }
    }
    return ChainComplex(C.ring(), std::move(mods), std::move(d));
}

bool is_regular_sequence_monomials(const std::vector<Monomial>& f)
{
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (!gcd(f[i], f[j]).is_one())
                return false;
    return true;
}

ChainComplex resolution_of(const MonomialIdeal& I)
{
    if (I.is_zero())
        return ChainComplex::ring_itself(I.ring());
    if (is_regular_sequence_monomials(I.generators()))
        return koszul(I.ring(), I.generators());
    return minimize(taylor(I));
}

} // namespace fiberres
