#include "fiberres/formulas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace fiberres {

namespace {

// Sum over graded entries (i, j) of A with i in [i_lo, i_hi] of A_{i,j} * B_{l-i, k-j}.
std::int64_t convolve(const BettiTable& A, const BettiTable& B, int ell, int k, int i_lo, int i_hi)
{
    std::int64_t s = 0;
    for (const auto& [ij, a] : A.graded_entries()) {
        const auto [i, j] = ij;
        if (i < i_lo || i > i_hi)
            continue;
        s += a * B.graded(ell - i, k - j);
    }
    return s;
}

// Candidate (l, k) with l = i + i', k = j + j' over the graded supports, i >= a_min, i' >= b_min.
void add_candidates(std::set<std::pair<int, int>>& out, const BettiTable& A, const BettiTable& B, int a_min,
                    int b_min, int shift)
{
    for (const auto& [ij, a] : A.graded_entries())
        for (const auto& [ij2, b] : B.graded_entries())
            if (ij.first >= a_min && ij2.first >= b_min)
                out.insert({ij.first + ij2.first + shift, ij.second + ij2.second});
}

std::int64_t total_or_zero(const BettiTable& t, int l) { return l < 0 ? 0 : t.total(l); }

} // namespace

std::int64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::int64_t betti_product(const BettiTable& bI, const BettiTable& bJ, int ell)
{
    if (ell < 1)
        throw std::invalid_argument("betti_product is defined for l >= 1; beta_0 = 1");
    std::int64_t s = 0;
    for (int i = 1; i <= ell; ++i)
        s += bI.total(i) * bJ.total(ell + 1 - i);
    return s;
}

std::int64_t graded_betti_product(const BettiTable& bI, const BettiTable& bJ, int ell, int k)
{
    if (ell < 1)
        throw std::invalid_argument("graded_betti_product is defined for l >= 1");
    return convolve(bI, bJ, ell + 1, k, 1, ell);
}

BettiTable star_betti_formula(const BettiTable& bI, const BettiTable& bJ)
{
    BettiTable t;
    t.add(0, 0);
    std::set<std::pair<int, int>> cand;
    add_candidates(cand, bI, bJ, 1, 1, -1);
    for (const auto& [l, k] : cand)
        t.add(l, k, graded_betti_product(bI, bJ, l, k));
    return t;
}

PowerSeries poincare_product(const PowerSeries& PI, const PowerSeries& PJ)
{
    if (PI[0] != 1 || PJ[0] != 1)
        throw std::invalid_argument("Poincaré series of a cyclic quotient must start with 1");
    const int D = std::min(PI.truncation(), PJ.truncation());
    PowerSeries one = PowerSeries::one(D);
    PowerSeries prod = (PI - one) * (PJ - one);
    if (D == 0)
        return PowerSeries::one(0);
    return PowerSeries::one(D - 1) + prod.divided_by_t();
}

std::int64_t betti_fiber(int ell, int m, int n, const BettiTable& bIp, const BettiTable& bJp)
{
    if (ell < 1)
        throw std::invalid_argument("betti_fiber is defined for l >= 1");
    std::int64_t s = 0;
    for (int t = 1; t <= ell; ++t)
        s += total_or_zero(bIp, t) * binomial(n, ell - t) + binomial(m, ell - t) * total_or_zero(bJp, t);
    return s + binomial(m + n, ell + 1) - binomial(m, ell + 1) - binomial(n, ell + 1);
}

std::int64_t graded_betti_fiber(int ell, int k, const BettiTable& gbIJ, const BettiTable& gbI,
                                const BettiTable& gbIp, const BettiTable& gbJ, const BettiTable& gbJp)
{
    if (ell == 0)
        return gbIJ.graded(0, k);
    // I' side: beta_{i}(R/I') with i >= 1 against beta_{l-i}(R/J);
    // J' side: beta_{i}(R/I) against beta_{l-i}(R/J') with l - i >= 1.
    return gbIJ.graded(ell, k) + convolve(gbIp, gbJ, ell, k, 1, ell) + convolve(gbI, gbJp, ell, k, 0, ell - 1);
}

BettiTable fiber_betti_formula(const BettiTable& gbIJ, const BettiTable& gbI, const BettiTable& gbIp,
                               const BettiTable& gbJ, const BettiTable& gbJp)
{
    std::set<std::pair<int, int>> cand;
    for (const auto& [lk, v] : gbIJ.graded_entries())
        cand.insert(lk);
    add_candidates(cand, gbIp, gbJ, 1, 0, 0);
    add_candidates(cand, gbI, gbJp, 0, 1, 0);
    BettiTable t;
    for (const auto& [l, k] : cand)
        t.add(l, k, graded_betti_fiber(l, k, gbIJ, gbI, gbIp, gbJ, gbJp));
    return t;
}

PowerSeries ideal_series_from_quotient(const PowerSeries& P_quotient)
{
    if (P_quotient[0] != 1)
        throw std::invalid_argument("Poincaré series of a cyclic quotient must start with 1");
    return (P_quotient - PowerSeries::one(P_quotient.truncation())).divided_by_t();
}

PowerSeries poincare_identity_1(const PowerSeries& PF, const PowerSeries& P_IpJ, const PowerSeries& P_IJp,
                                const PowerSeries& P_IplusJ, const PowerSeries& P_IJ)
{
    // t * P_IJ is known one degree further than P_IJ itself
    PowerSeries tP = PowerSeries(P_IJ.coeffs(), P_IJ.truncation() + 1).times_t();
    PowerSeries lhs = PF - P_IpJ - P_IJp + P_IplusJ;
    return lhs - PowerSeries::one_plus_t_pow(1, tP.truncation()) * tP;
}

PowerSeries poincare_identity_2(const PowerSeries& PF, const PowerSeries& PIp, const PowerSeries& PJp, int m,
                                int n)
{
    const int D = std::min({PF.truncation(), PIp.truncation(), PJp.truncation()});
    auto binom_pow = [D](int e) { return PowerSeries::one_plus_t_pow(e, D); };
    const PowerSeries one = PowerSeries::one(D);
    PowerSeries inner = PF - binom_pow(n) * PIp - binom_pow(m) * PJp + binom_pow(m + n);
    PowerSeries rhs = binom_pow(1) * (binom_pow(m) - one) * (binom_pow(n) - one);
    return inner.times_t() - rhs;
}

bool vandermonde_check(int m, int n, int r)
{
    std::int64_t s = 0;
    for (int t = 0; t <= r; ++t)
        s += binomial(m, t) * binomial(n, r - t);
    return s == binomial(m + n, r);
}

} // namespace fiberres
