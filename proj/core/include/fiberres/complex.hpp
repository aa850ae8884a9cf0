#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fiberres/betti_table.hpp"
#include "fiberres/matrix.hpp"
#include "fiberres/power_series.hpp"
#include "fiberres/ring.hpp"

namespace fiberres {

class ComplexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Graded free module R(-t_1) ⊕ ... ⊕ R(-t_r), generator i in internal degree twists[i].
///
/// Optionally each generator also carries a fine (Z^N) degree, a monomial whose
/// total degree is the twist. Monomial constructions keep it and homology and
/// lifting use it to split graded pieces into much smaller multidegree blocks.
class GradedFreeModule {
public:
    GradedFreeModule() = default;
    explicit GradedFreeModule(std::vector<int> twists);
    GradedFreeModule(std::vector<int> twists, std::vector<Monomial> multidegrees);
    /// Twists taken from the total degrees of the multidegrees.
    static GradedFreeModule from_multidegrees(std::vector<Monomial> multidegrees);

    std::size_t rank() const { return twists_.size(); }
    bool is_zero() const { return twists_.empty(); }
    const std::vector<int>& twists() const { return twists_; }
    int twist(std::size_t i) const { return twists_[i]; }

    bool has_multidegrees() const { return mdeg_.has_value(); }
    const std::vector<Monomial>& multidegrees() const { return *mdeg_; }
    GradedFreeModule without_multidegrees() const { return GradedFreeModule(twists_); }

    /// Twists (and fine degrees, when both carry them) of a ⊕ b.
    static GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);
    /// Basis a_i ⊗ b_j ordered a-major.
    static GradedFreeModule tensor(const GradedFreeModule& a, const GradedFreeModule& b);

    /// Compares twists only.
    friend bool operator==(const GradedFreeModule& a, const GradedFreeModule& b)
    {
        return a.twists_ == b.twists_;
    }

private:
    std::vector<int> twists_;
    std::optional<std::vector<Monomial>> mdeg_;
};

/// Bounded complex of graded free modules with polynomial differentials
/// d_n : C_n -> C_{n-1}, stored as rank(n-1) x rank(n) matrices.
///
/// Construction validates matrix shapes and that every nonzero entry of column j
/// of d_n is homogeneous of degree twist_n[j] - twist_{n-1}[i]. It does not check
/// d^2 = 0; see is_complex(). Fine degrees survive only when every entry is a
/// single term matching them.
class ChainComplex {
public:
    ChainComplex() = default;
    explicit ChainComplex(RingSpec ring) : ring_(std::move(ring)) {}
    ChainComplex(RingSpec ring, std::map<int, GradedFreeModule> modules,
                 std::map<int, PolyMatrix> differentials);

    /// R in homological degree 0: the resolution of R/0.
    static ChainComplex ring_itself(const RingSpec& ring);

    const RingSpec& ring() const { return ring_; }
    const GradedFreeModule& module(int n) const;
    std::size_t rank(int n) const { return module(n).rank(); }
    /// d_n; an empty-shaped matrix outside the support.
    const PolyMatrix& differential(int n) const;

    bool is_zero() const { return modules_.empty(); }
    /// Lowest and highest homological degree with a nonzero module.
    int min_degree() const;
    int max_degree() const;
    std::vector<int> degrees() const;
    std::size_t total_rank() const;

    bool has_multidegrees() const;
    ChainComplex without_multidegrees() const;

    friend bool operator==(const ChainComplex& a, const ChainComplex& b);

private:
    RingSpec ring_;
    std::map<int, GradedFreeModule> modules_;     // nonzero modules only
    std::map<int, PolyMatrix> differentials_;     // n in [min, max + 1]
};

/// Degreewise matrices f_n : source_n -> target_n of internal degree 0.
class ChainMap {
public:
    ChainMap() = default;
    /// Validates shapes and homogeneity. Missing degrees are zero maps.
    ChainMap(ChainComplex source, ChainComplex target, std::map<int, PolyMatrix> mats);

    static ChainMap identity(const ChainComplex& C);
    static ChainMap zero(ChainComplex source, ChainComplex target);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    /// f_n with shape rank(target_n) x rank(source_n).
    PolyMatrix at(int n) const;
    const std::map<int, PolyMatrix>& matrices() const { return mats_; }

private:
    ChainComplex source_;
    ChainComplex target_;
    std::map<int, PolyMatrix> mats_;
};

/// Basis bookkeeping for a degree of a tensor product: blocks C_i ⊗ D_j with
/// i ascending, each block ordered left-generator-major.
struct TensorBlock {
    int left_degree;
    int right_degree;
    std::size_t offset;
    std::size_t left_rank;
    std::size_t right_rank;
};

class TensorLayout {
public:
    /// Blocks of (C ⊗ D)_n restricted to left degrees >= left_min and right
    /// degrees >= right_min.
    TensorLayout(const ChainComplex& C, const ChainComplex& D, int n, int left_min = std::numeric_limits<int>::min(),
                 int right_min = std::numeric_limits<int>::min());

    std::size_t size() const { return size_; }
    const std::vector<TensorBlock>& blocks() const { return blocks_; }
    /// Index of a ⊗ b with a in C_i; nullopt when that block is absent.
    std::optional<std::size_t> index(int i, std::size_t a, std::size_t b) const;

private:
    std::vector<TensorBlock> blocks_;
    std::size_t size_ = 0;
};

ChainComplex suspension(const ChainComplex& C, int ell);
ChainComplex truncate_geq(const ChainComplex& C, int p);
ChainComplex tensor(const ChainComplex& C, const ChainComplex& D);
ChainComplex direct_sum(const ChainComplex& C, const ChainComplex& D);
/// Cone(f)_n = target_n ⊕ source_{n-1} with d = [[d^target, f], [0, -d^source]].
/// Throws ComplexError when f fails to commute with the differentials.
ChainComplex cone(const ChainMap& f);

bool is_complex(const ChainComplex& C);
bool is_chain_map(const ChainMap& f);
/// All differential entries lie in the irrelevant ideal.
bool is_minimal(const ChainComplex& C);
/// Coefficient n = rank C_n for n <= D. Throws ComplexError for negative degrees.
PowerSeries generating_function(const ChainComplex& C, int D);
/// Throws ComplexError for a non-minimal complex.
BettiTable graded_betti(const ChainComplex& C);
/// Twist counts of every module, whether or not C is minimal.
BettiTable generator_table(const ChainComplex& C);

} // namespace fiberres
