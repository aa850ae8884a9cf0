#pragma once

#include "fiberres/complex.hpp"

namespace fiberres {

/// X ⋆ Y: R in degree 0 and (X_{>=1} ⊗ Y_{>=1})_{n+1} in degree n >= 1, basis
/// a∗b ordered by |a| ascending, then a, then b. Both inputs need a single
/// twist-0 generator in degree 0 and nothing below.
ChainComplex star_product(const ChainComplex& X, const ChainComplex& Y);

/// Index of a∗b in (X ⋆ Y)_{i+j-1} for a in X_i, b in Y_j, i, j >= 1.
std::size_t star_index(const ChainComplex& X, const ChainComplex& Y, int i, int j, std::size_t a,
                       std::size_t b);

/// Graded Betti table of X ⋆ Y against the convolution of the inputs' tables.
/// Throws ComplexError for non-minimal inputs.
bool star_betti_check(const ChainComplex& X, const ChainComplex& Y);

} // namespace fiberres
