#include "fiberres/scalar.hpp"

#include <ostream>
#include <regex>

namespace fiberres {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p)
{
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p)
{
    mpz_class r = v % p;
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

} // namespace

bool is_prime_number(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (!is_prime_number(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (p > (1u << 31))
        throw std::invalid_argument("field characteristic too large");
    return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& text)
{
    if (text == "QQ" || text == "Q")
        return rationals();
    static const std::regex fp(R"((?:F_|GF\()(\d+)\)?)");
    std::smatch m;
    if (std::regex_match(text, m, fp))
        return prime(static_cast<std::uint32_t>(std::stoul(m[1].str())));
    throw std::invalid_argument("unknown field '" + text + "'");
}

std::string Field::name() const
{
    return is_prime() ? "F_" + std::to_string(p_) : "QQ";
}

Scalar Scalar::from_int(long long v, const Field& k)
{
    return from_mpz(mpz_class(static_cast<long>(v)), k);
}

Scalar Scalar::from_mpz(const mpz_class& v, const Field& k)
{
    if (k.is_prime())
        return Scalar(ModP{reduce(v, k.characteristic()), k.characteristic()});
    return Scalar(mpq_class(v));
}

Scalar Scalar::from_fraction(const mpz_class& num, const mpz_class& den, const Field& k)
{
    if (k.is_prime()) {
        const auto p = k.characteristic();
        const auto d = reduce(den, p);
        if (d == 0)
            throw std::domain_error("denominator vanishes in " + k.name());
        return Scalar(ModP{mul_mod(reduce(num, p), pow_mod(d, p - 2, p), p), p});
    }
    if (den == 0)
        throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Field Scalar::field() const
{
    if (const auto* m = std::get_if<ModP>(&v_))
        return Field(Field::Kind::Prime, m->p);
    return Field::rationals();
}

bool Scalar::is_zero() const
{
    if (const auto* m = std::get_if<ModP>(&v_))
        return m->value == 0;
    return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const
{
    if (const auto* m = std::get_if<ModP>(&v_))
        return m->value == 1;
    return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::operator-() const
{
    if (const auto* m = std::get_if<ModP>(&v_))
        return Scalar(ModP{m->value == 0 ? 0 : m->p - m->value, m->p});
    return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (auto* m = std::get_if<ModP>(&v_)) {
        const auto* n = std::get_if<ModP>(&o.v_);
        if (!n || n->p != m->p)
            throw FieldMismatch();
        std::uint64_t s = std::uint64_t(m->value) + n->value;
        m->value = static_cast<std::uint32_t>(s >= m->p ? s - m->p : s);
        return *this;
    }
    const auto* q = std::get_if<mpq_class>(&o.v_);
    if (!q)
        throw FieldMismatch();
    std::get<mpq_class>(v_) += *q;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (auto* m = std::get_if<ModP>(&v_)) {
        const auto* n = std::get_if<ModP>(&o.v_);
        if (!n || n->p != m->p)
            throw FieldMismatch();
        m->value = mul_mod(m->value, n->value, m->p);
        return *this;
    }
    const auto* q = std::get_if<mpq_class>(&o.v_);
    if (!q)
        throw FieldMismatch();
    std::get<mpq_class>(v_) *= *q;
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    if (const auto* m = std::get_if<ModP>(&v_))
        return Scalar(ModP{pow_mod(m->value, m->p - 2, m->p), m->p});
    mpq_class q = 1 / std::get<mpq_class>(v_);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.v_ == b.v_;
}

bool Scalar::prints_negative() const
{
    if (const auto* m = std::get_if<ModP>(&v_))
        return m->value > m->p / 2;
    return std::get<mpq_class>(v_) < 0;
}

std::string Scalar::to_string() const
{
    if (const auto* m = std::get_if<ModP>(&v_)) {
        if (m->value > m->p / 2)
            return "-" + std::to_string(m->p - m->value);
        return std::to_string(m->value);
    }
    return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

} // namespace fiberres
