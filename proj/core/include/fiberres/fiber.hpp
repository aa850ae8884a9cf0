#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "fiberres/complex.hpp"
#include "fiberres/homcheck.hpp"
#include "fiberres/ring.hpp"

namespace fiberres {

class LiftError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Containment or other instance violation; `what()` names the failing pair.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LiftReport {
    ChainMap phi;
    /// Entries of phi_j, j >= 1, were restricted to the ideal.
    bool constrained = false;
    int max_degree_lifted = 0;
};

/// Lifts the identity of R in degree 0 to a chain map S -> X, degree by degree,
/// solving d^X v = phi_{j-1}(d^S g) for each generator g by exact elimination.
/// With constrain_to, the unknowns of phi_j (j >= 1) are monomial multiples lying
/// in the ideal. Throws HypothesisError when H_0(S) does not map onto H_0(X),
/// LiftError when some system has no solution.
LiftReport lift_chain_map(const ChainComplex& S, const ChainComplex& X,
                          const std::optional<MonomialIdeal>& constrain_to = std::nullopt);

/// Σ^{-1}(S_{>=1} ⊗ Y); degree n holds (S_{>=1} ⊗ Y)_{n+1}.
ChainComplex phi_source(const ChainComplex& S, const ChainComplex& Y);
/// Σ^{-1}(X ⊗ T_{>=1}).
ChainComplex psi_source(const ChainComplex& X, const ChainComplex& T);

/// Φ : Σ^{-1}(S_{>=1} ⊗ Y) -> X ⋆ Y for a lift phi : S -> X.
ChainMap build_phi(const ChainMap& phi, const ChainComplex& S, const ChainComplex& Y, const ChainComplex& starXY);
/// Ψ : Σ^{-1}(X ⊗ T_{>=1}) -> X ⋆ Y for a lift psi : T -> Y.
ChainMap build_psi(const ChainMap& psi, const ChainComplex& X, const ChainComplex& T, const ChainComplex& starXY);
/// (Φ Ψ) on the direct sum of the sources. Throws ComplexError on target mismatch.
ChainMap omega(const ChainMap& Phi, const ChainMap& Psi);

/// Four ideals I' ⊆ I, J' ⊆ J and resolutions X, Y, S, T of R/I, R/J, R/I', R/J'.
struct FiberInstance {
    RingSpec ring;
    MonomialIdeal Ip, I, Jp, J;
    ChainComplex X, Y, S, T;

    /// Builds the four resolutions (Koszul, minimized Taylor, or R for the zero ideal).
    static FiberInstance from_ideals(const MonomialIdeal& Ip, const MonomialIdeal& I, const MonomialIdeal& Jp,
                                     const MonomialIdeal& J);
    /// I and J generated by the variables of the two blocks of a partitioned ring.
    static FiberInstance from_blocks(const MonomialIdeal& Ip, const MonomialIdeal& Jp);

    /// Throws HypothesisError for a containment failure and ComplexError for a
    /// malformed resolution.
    void validate() const;

    /// Ideal <I', IJ, J'> whose quotient Cone(Ω) resolves.
    MonomialIdeal target_ideal() const;
};

struct FiberBuild {
    ChainComplex star;
    LiftReport phi_lift, psi_lift;
    ChainMap Phi, Psi, Omega;
    ChainComplex cone_phi, cone_psi;
    ChainComplex resolution;
};

/// Sufficient conditions for minimality of Cone(Ω), and the observed answer.
struct MinimalityCertificate {
    bool regular_I = false;
    bool regular_J = false;
    bool ip_in_i_squared = false;
    bool jp_in_j_squared = false;
    bool inputs_minimal = false;
    bool constrained_lifts = false;
    bool hypotheses = false; ///< all of the above
    bool is_minimal = false; ///< no unit entry in the constructed differentials
};

enum class TorMode { Structural, Bounded };

struct TorCertificate {
    TorMode mode = TorMode::Structural;
    int degree_bound = 0;
    bool independent = true;
    /// First failing pair, e.g. "{I', J}".
    std::string failing_pair;
};

/// Whether the constrained lift hypotheses hold on one side: the ideal is
/// generated by a regular sequence and the smaller one sits in its square.
bool constrained_lift_applicable(const MonomialIdeal& Ip, const MonomialIdeal& I);

/// Builds everything. With constrained_lift, each side uses the restricted
/// solve when its hypotheses hold and the plain solve otherwise.
FiberBuild build_fiber(const FiberInstance& inst, bool constrained_lift = true);

ChainComplex fiber_resolution(const FiberInstance& inst, bool constrained_lift = true);
ChainComplex cone_phi(const FiberInstance& inst, bool constrained_lift = true);
ChainComplex cone_psi(const FiberInstance& inst, bool constrained_lift = true);

MinimalityCertificate certify_minimal(const FiberInstance& inst, const FiberBuild& build);

/// Tor-independence of {I, J}, {I', J}, {I, J'}: structural when the supports are
/// disjoint, otherwise by tor_dims up to degree_bound.
TorCertificate certify_tor_independence(const FiberInstance& inst, int degree_bound);

/// Largest generator degree of the four ideals + homological length of Cone(Ω) + 2.
int default_degree_bound(const FiberInstance& inst);

} // namespace fiberres
