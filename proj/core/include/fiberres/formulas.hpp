#pragma once

#include <cstdint>

#include "fiberres/betti_table.hpp"
#include "fiberres/power_series.hpp"

namespace fiberres {

/// C(n, k), zero outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

/// beta_l(R/IJ) from the tables of R/I and R/J, l >= 1.
/// Throws std::invalid_argument for l = 0 (that value is 1).
std::int64_t betti_product(const BettiTable& bI, const BettiTable& bJ, int ell);
/// beta_{l,k}(R/IJ), l >= 1.
std::int64_t graded_betti_product(const BettiTable& bI, const BettiTable& bJ, int ell, int k);
/// Full graded table of R/IJ assembled from graded_betti_product.
BettiTable star_betti_formula(const BettiTable& bI, const BettiTable& bJ);

/// 1 + (P_I - 1)(P_J - 1)/t, known one degree less than the inputs.
/// Throws std::invalid_argument unless both constant terms are 1.
PowerSeries poincare_product(const PowerSeries& PI, const PowerSeries& PJ);

/// beta_l of the fiber-product quotient for I = <m x-variables>, J = <n y-variables>.
std::int64_t betti_fiber(int ell, int m, int n, const BettiTable& bIp, const BettiTable& bJp);
/// beta_{l,k} of R/<I', IJ, J'>; for l = 0 this is beta_{0,k}(R/IJ).
std::int64_t graded_betti_fiber(int ell, int k, const BettiTable& gbIJ, const BettiTable& gbI,
                                const BettiTable& gbIp, const BettiTable& gbJ, const BettiTable& gbJp);
/// Full graded table assembled from graded_betti_fiber.
BettiTable fiber_betti_formula(const BettiTable& gbIJ, const BettiTable& gbI, const BettiTable& gbIp,
                               const BettiTable& gbJ, const BettiTable& gbJp);

/// (P_F - P_{R/(I'+J)} - P_{R/(I+J')} + P_{R/(I+J)}) - t(1+t) P_{IJ}, where P_{IJ}
/// is the Poincaré series of the ideal IJ as a module. Zero when the identity holds.
PowerSeries poincare_identity_1(const PowerSeries& PF, const PowerSeries& P_IpJ, const PowerSeries& P_IJp,
                                const PowerSeries& P_IplusJ, const PowerSeries& P_IJ);
/// t(P_F - (1+t)^n P_{R/I'} - (1+t)^m P_{R/J'} + (1+t)^{m+n})
///   - (1+t)((1+t)^m - 1)((1+t)^n - 1). Zero when the identity holds.
PowerSeries poincare_identity_2(const PowerSeries& PF, const PowerSeries& PIp, const PowerSeries& PJp, int m,
                                int n);

/// P_{IJ} = (P_{R/IJ} - 1)/t.
PowerSeries ideal_series_from_quotient(const PowerSeries& P_quotient);

/// C(m+n, r) against the Vandermonde sum.
bool vandermonde_check(int m, int n, int r);

} // namespace fiberres
