#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fiberres/complex.hpp"
#include "fiberres/ring.hpp"

namespace fiberres {

/// Basis element of a graded piece: generator index times a monomial.
struct PieceBasis {
    std::size_t generator;
    Monomial monomial;
};

/// d_n restricted to internal degree d, as a sparse matrix over k.
struct GradedPiece {
    std::vector<PieceBasis> source; ///< columns
    std::vector<PieceBasis> target; ///< rows
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns; ///< (row, value), row ascending

    std::size_t rows() const { return target.size(); }
    std::size_t cols() const { return source.size(); }
};

/// Bases use monomials of degree d - twist, grlex descending, generator-major.
/// With a quotient ideal, only standard monomials are kept and entries are
/// reduced modulo it.
GradedPiece graded_piece(const ChainComplex& C, int n, int d, const MonomialIdeal* quotient = nullptr);

/// Exact rank over the coefficient field of the ring.
std::size_t rank(const GradedPiece& P, const Field& k);

struct HomologyOptions {
    /// Skip the multidegree strand decomposition even when fine degrees exist.
    bool force_general = false;
    /// Compute homology of C ⊗ R/quotient.
    std::optional<MonomialIdeal> quotient;
};

struct HomologyReport {
    /// dim H_i in internal degree d; nonzero entries only.
    std::map<std::pair<int, int>, std::int64_t> dims;
    int degree_bound = 0;
    bool exact_in_positive = true;
    /// dim H_0 in degrees 0..degree_bound.
    std::vector<std::int64_t> h0_hilbert;
    /// Alternating sums of chain and homology dimensions agree in every degree.
    bool euler_ok = true;
    /// Ranks were consistent with d^2 = 0 (no negative homology dimension).
    bool consistent = true;
    /// The bound reaches every degree in which homology can occur.
    bool complete = false;
    /// Whether the multidegree strand decomposition was used.
    bool multigraded = false;

    std::int64_t dim(int i, int d) const;
};

HomologyReport homology_dims(const ChainComplex& C, int d_max, const HomologyOptions& opts = {});

/// Homology of X ⊗ R/J computed on standard monomials of R/J.
/// Throws RingMismatch when J lives in another ring.
HomologyReport tor_dims(const ChainComplex& X, const MonomialIdeal& J, int d_max);

/// Variables appearing in some differential entry.
std::vector<std::size_t> complex_support(const ChainComplex& C);

/// Disjoint variable supports of the complex and the ideal.
bool structurally_tor_independent(const ChainComplex& X, const MonomialIdeal& J);

/// Structural test first, then tor_dims up to d_max.
bool is_tor_independent(const ChainComplex& X, const MonomialIdeal& J, int d_max);

/// Total degree of the lcm of all fine degrees, when the complex carries them.
std::optional<int> multigraded_complete_bound(const ChainComplex& C);

/// Attaches fine degrees read off single-term differential entries, starting
/// from twist-0 generators in the lowest degree. Nullopt when that fails.
std::optional<ChainComplex> infer_multidegrees(const ChainComplex& C);

} // namespace fiberres
