#pragma once

#include <cstddef>
#include <vector>

#include "fiberres/complex.hpp"
#include "fiberres/ring.hpp"

namespace fiberres {

/// Subsets of {0..r-1} ordered by size, then lexicographically; index = position
/// within its homological degree.
std::vector<std::vector<std::vector<std::size_t>>> subsets_by_size(std::size_t r);

/// Koszul complex on f_1..f_m. Basis e_T for subsets T, twist sum of deg f_i, and
/// d(e_T) = sum_{i in T} (-1)^{pos(i,T)} f_i e_{T \ i}. Throws std::invalid_argument
/// for zero or non-homogeneous entries.
ChainComplex koszul(const RingSpec& ring, const std::vector<Polynomial>& f);
ChainComplex koszul(const RingSpec& ring, const std::vector<Monomial>& f);

/// Taylor complex on the minimal generators of I. Throws for the zero ideal.
ChainComplex taylor(const MonomialIdeal& I);
/// Taylor complex on the given list as is, redundant generators included.
ChainComplex taylor_from_generators(const RingSpec& ring, const std::vector<Monomial>& gens);

/// Gaussian cancellation of unit entries until the complex is minimal.
ChainComplex minimize(const ChainComplex& C);

/// Pairwise disjoint supports.
bool is_regular_sequence_monomials(const std::vector<Monomial>& f);

/// Minimal free resolution of R/I: R itself for I = 0, Koszul for a regular
/// sequence, minimized Taylor otherwise.
ChainComplex resolution_of(const MonomialIdeal& I);

} // namespace fiberres
