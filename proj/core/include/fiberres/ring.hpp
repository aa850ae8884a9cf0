#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fiberres/scalar.hpp"

namespace fiberres {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RingMismatch : public std::invalid_argument {
public:
    RingMismatch() : std::invalid_argument("operands live in different rings") {}
};

/// Split of the ring variables into an x-block and a y-block.
struct VariablePartition {
    std::vector<std::string> block_a;
    std::vector<std::string> block_b;

    friend bool operator==(const VariablePartition&, const VariablePartition&) = default;
};

/// Polynomial ring k[v_1, ..., v_N], optionally split into two variable blocks.
class RingSpec {
public:
    RingSpec() = default;
    explicit RingSpec(std::vector<std::string> variables, Field field = Field{},
                      std::optional<VariablePartition> partition = std::nullopt);

    /// Ring on block_a followed by block_b, with the partition recorded.
    static RingSpec with_blocks(std::vector<std::string> block_a, std::vector<std::string> block_b,
                                Field field = Field{});

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const Field& field() const { return field_; }
    const std::optional<VariablePartition>& partition() const { return partition_; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Variable indices of block A (resp. B); empty when there is no partition.
    std::vector<std::size_t> block_a_indices() const;
    std::vector<std::size_t> block_b_indices() const;

    RingSpec with_field(Field f) const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    std::vector<std::string> vars_;
    Field field_;
    std::optional<VariablePartition> partition_;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }
    int degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    bool divides(const Monomial& m) const;
    /// Indices of variables with positive exponent.
    std::vector<std::size_t> support() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; precondition b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    std::string to_string(const RingSpec& ring) const;

private:
    std::vector<int> e_;
    int deg_ = 0;
};

/// Graded lexicographic comparison in the declared variable order.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// All monomials of total degree d in n variables, grlex descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

/// Number of monomials of degree d in n variables, C(n-1+d, n-1).
std::size_t count_monomials(std::size_t nvars, int d);

struct Term {
    Monomial mono;
    Scalar coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial; terms kept grlex-descending with nonzero coefficients.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial constant(const Scalar& c, std::size_t nvars);
    static Polynomial term(const Monomial& m, const Scalar& c);
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_homogeneous() const;
    /// Total degree of a nonzero homogeneous polynomial; nullopt otherwise.
    std::optional<int> homogeneous_degree() const;
    bool has_constant_term() const;
    /// Single term with coefficient in the field (scalar times monomial).
    bool is_term() const { return terms_.size() == 1; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& c, const Polynomial& p);
    Polynomial times(const Monomial& m) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string(const RingSpec& ring) const;

private:
    std::vector<Term> terms_;
};

/// Parses the text grammar
///   poly := ['+'|'-'] term (('+'|'-') term)*
///   term := coeff | [coeff '*'] factor ('*' factor)*
///   factor := var ['^' nat],  coeff := integer ['/' integer]
Polynomial parse_polynomial(std::string_view text, const RingSpec& ring);

/// Comma-separated list of polynomials; an empty string yields an empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingSpec& ring);

/// Monomial ideal stored by its unique minimal generating set (grlex-descending).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(RingSpec ring, std::vector<Monomial> generators);

    static MonomialIdeal zero(RingSpec ring) { return MonomialIdeal(std::move(ring), {}); }
    /// Each polynomial must be a single term.
    static MonomialIdeal from_polynomials(RingSpec ring, const std::vector<Polynomial>& gens);
    static MonomialIdeal parse(RingSpec ring, std::string_view text);
    /// Ideal generated by the given variables.
    static MonomialIdeal of_variables(RingSpec ring, const std::vector<std::size_t>& indices);

    const RingSpec& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    std::size_t num_generators() const { return gens_.size(); }
    int max_generator_degree() const;

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;
    /// Variables appearing in some generator.
    std::vector<std::size_t> support() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    std::string to_string() const;

private:
    RingSpec ring_;
    std::vector<Monomial> gens_;
};

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_intersection(const MonomialIdeal& I, const MonomialIdeal& J);

/// True iff every monomial of p is divisible by a generator of I.
bool ideal_membership(const Polynomial& p, const MonomialIdeal& I);

/// Entry d = number of degree-d monomials outside I, for 0 <= d <= d_max.
std::vector<std::size_t> hilbert_function(const MonomialIdeal& I, int d_max);

/// Both sides of the fiber-product ideal identity.
struct FiberIdealReport {
    MonomialIdeal intersection; ///< (I' + J) ∩ (I + J')
    MonomialIdeal generated;    ///< <I', IJ, J'>
    bool equal = false;
};

/// Compares (Ip + J) ∩ (I + Jp) with <Ip, IJ, Jp> by two-sided membership.
/// Throws std::invalid_argument unless Ip ⊆ I and Jp ⊆ J.
FiberIdealReport fiber_ideal_report(const MonomialIdeal& Ip, const MonomialIdeal& I,
                                    const MonomialIdeal& Jp, const MonomialIdeal& J);

bool fiber_ideal_check(const MonomialIdeal& Ip, const MonomialIdeal& I, const MonomialIdeal& Jp,
                       const MonomialIdeal& J);

} // namespace fiberres
