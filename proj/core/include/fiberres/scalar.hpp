#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace fiberres {

/// Coefficient field: a prime field F_p or the rationals.
class Field {
public:
    enum class Kind { Prime, Rational };

    static constexpr std::uint32_t kDefaultPrime = 32003;

    Field() : Field(Kind::Prime, kDefaultPrime) {}

    static Field prime(std::uint32_t p);
    static Field rationals() { return Field(Kind::Rational, 0); }

    /// Parses "F_<p>", "GF(<p>)" or "QQ"/"Q".
    static Field parse(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::Prime; }
    std::uint32_t characteristic() const { return p_; }

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

class FieldMismatch : public std::logic_error {
public:
    FieldMismatch() : std::logic_error("arithmetic across different coefficient fields") {}
};

/// Element of F_p, stored with its modulus so arithmetic needs no context.
struct ModP {
    std::uint32_t value = 0;
    std::uint32_t p = Field::kDefaultPrime;

    friend bool operator==(const ModP&, const ModP&) = default;
};

/// A field element. Either an F_p residue or an exact rational.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(const Field& k) { return from_int(0, k); }
    static Scalar one(const Field& k) { return from_int(1, k); }
    static Scalar from_int(long long v, const Field& k);
    /// Reduces an arbitrary-precision integer into the field.
    static Scalar from_mpz(const mpz_class& v, const Field& k);
    /// num/den; throws std::domain_error when den vanishes in the field.
    static Scalar from_fraction(const mpz_class& num, const mpz_class& den, const Field& k);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// F_p residues are printed in the symmetric range (-p/2, p/2].
    std::string to_string() const;
    /// Whether to_string() starts with a minus sign.
    bool prints_negative() const;

    const std::variant<ModP, mpq_class>& raw() const { return v_; }

private:
    explicit Scalar(ModP m) : v_(m) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}

    std::variant<ModP, mpq_class> v_{ModP{}};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace fiberres
