#include "fiberres/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fiberres {

// ---------------------------------------------------------------- RingSpec

RingSpec::RingSpec(std::vector<std::string> variables, Field field,
                   std::optional<VariablePartition> partition)
    : vars_(std::move(variables)), field_(field), partition_(std::move(partition))
{
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty())
            throw std::invalid_argument("empty variable name");
        if (!(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw std::invalid_argument("variable '" + v + "' must start with a letter");
        for (char c : v)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw std::invalid_argument("variable '" + v + "' is not an identifier");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable '" + v + "'");
    }
    if (partition_) {
        std::set<std::string> covered;
        for (const auto* block : {&partition_->block_a, &partition_->block_b})
            for (const auto& v : *block) {
                if (!seen.count(v))
                    throw std::invalid_argument("partition names unknown variable '" + v + "'");
                if (!covered.insert(v).second)
                    throw std::invalid_argument("variable '" + v + "' appears in both blocks");
            }
        if (covered.size() != vars_.size())
            throw std::invalid_argument("partition blocks do not cover all variables");
    }
}

RingSpec RingSpec::with_blocks(std::vector<std::string> block_a, std::vector<std::string> block_b,
                               Field field)
{
    std::vector<std::string> all = block_a;
    all.insert(all.end(), block_b.begin(), block_b.end());
    return RingSpec(std::move(all), field, VariablePartition{std::move(block_a), std::move(block_b)});
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return i;
    return std::nullopt;
}

std::vector<std::size_t> RingSpec::block_a_indices() const
{
    std::vector<std::size_t> out;
    if (partition_)
        for (const auto& v : partition_->block_a)
            out.push_back(*index_of(v));
    return out;
}

std::vector<std::size_t> RingSpec::block_b_indices() const
{
    std::vector<std::size_t> out;
    if (partition_)
        for (const auto& v : partition_->block_b)
            out.push_back(*index_of(v));
    return out;
}

RingSpec RingSpec::with_field(Field f) const
{
    RingSpec r = *this;
    r.field_ = f;
    return r;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents))
{
    for (int x : e_) {
        if (x < 0)
            throw std::invalid_argument("negative exponent");
        deg_ += x;
    }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i)
{
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const
{
    if (deg_ > m.deg_)
        return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > m.e_[i])
            return false;
    return true;
}

std::vector<std::size_t> Monomial::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0)
            s.push_back(i);
    return s;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] += b.e_[i];
    r.deg_ += b.deg_;
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] -= b.e_[i];
    r.deg_ -= b.deg_;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    std::vector<int> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    std::vector<int> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
}

std::string Monomial::to_string(const RingSpec& ring) const
{
    if (is_one())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += ring.variables()[i];
        if (e_[i] > 1)
            s += '^' + std::to_string(e_[i]);
    }
    return s;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    return a.exponents() <=> b.exponents();
}

namespace {

void enumerate_monomials(std::size_t pos, int remaining, std::vector<int>& cur,
                         std::vector<Monomial>& out)
{
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        enumerate_monomials(pos + 1, remaining - e, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d)
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    if (nvars == 0) {
        if (d == 0)
            out.emplace_back(std::vector<int>{});
        return out;
    }
    out.reserve(count_monomials(nvars, d));
    std::vector<int> cur(nvars, 0);
    enumerate_monomials(0, d, cur, out);
    return out;
}

std::size_t count_monomials(std::size_t nvars, int d)
{
    if (d < 0)
        return 0;
    if (nvars == 0)
        return d == 0 ? 1 : 0;
    // C(nvars - 1 + d, nvars - 1)
    std::size_t k = nvars - 1, n = k + static_cast<std::size_t>(d);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(const Scalar& c, std::size_t nvars)
{
    return term(Monomial::one(nvars), c);
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c)
{
    Polynomial p;
    if (!c.is_zero())
        p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().coeff.is_zero())
            p.terms_.pop_back();
    }
    return p;
}

bool Polynomial::is_homogeneous() const
{
    return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

std::optional<int> Polynomial::homogeneous_degree() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.front().mono.degree();
}

bool Polynomial::has_constant_term() const
{
    return !terms_.empty() && terms_.back().mono.is_one();
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.terms_.empty())
        return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae && b != be) {
        auto c = grlex_compare(a->mono, b->mono);
        if (c > 0)
            merged.push_back(std::move(*a++));
        else if (c < 0)
            merged.push_back(*b++);
        else {
            Scalar s = a->coeff + b->coeff;
            if (!s.is_zero())
                merged.push_back({std::move(a->mono), std::move(s)});
            ++a;
            ++b;
        }
    }
    for (; a != ae; ++a)
        merged.push_back(std::move(*a));
    for (; b != be; ++b)
        merged.push_back(*b);
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    return *this += -o;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (b.terms_.size() == 1) {
        Polynomial r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) {
            Scalar c = t.coeff * b.terms_[0].coeff;
            if (!c.is_zero())
                r.terms_.push_back({t.mono * b.terms_[0].mono, std::move(c)});
        }
        return r;
    }
    std::vector<Term> all;
    all.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            all.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Polynomial::from_terms(std::move(all));
}

Polynomial operator*(const Scalar& c, const Polynomial& p)
{
    if (c.is_zero())
        return {};
    Polynomial r = p;
    for (auto& t : r.terms_)
        t.coeff *= c;
    return r;
}

Polynomial Polynomial::times(const Monomial& m) const
{
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.mono = t.mono * m;
    return r;
}

std::string Polynomial::to_string(const RingSpec& ring) const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = t.coeff.prints_negative();
        Scalar mag = neg ? -t.coeff : t.coeff;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (t.mono.is_one())
            s += mag.to_string();
        else if (mag.is_one())
            s += t.mono.to_string(ring);
        else
            s += mag.to_string() + "*" + t.mono.to_string(ring);
    }
    return s;
}

// ----------------------------------------------------------------- parsing

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const RingSpec& ring) : s_(text), ring_(ring) {}

    Polynomial parse_all()
    {
        Polynomial p = parse_poly();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

    Polynomial parse_poly()
    {
        std::vector<Term> terms;
        skip_ws();
        bool neg = false;
        if (peek('+') || peek('-'))
            neg = s_[pos_++] == '-';
        parse_term(neg, terms);
        while (true) {
            skip_ws();
            if (!(peek('+') || peek('-')))
                break;
            neg = s_[pos_++] == '-';
            parse_term(neg, terms);
        }
        return Polynomial::from_terms(std::move(terms));
    }

    bool at_end()
    {
        skip_ws();
        return pos_ == s_.size();
    }

    bool consume(char c)
    {
        skip_ws();
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) + " in '" +
                         std::string(s_) + "': " + msg);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    bool peek_digit() const
    {
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    bool peek_ident() const
    {
        return pos_ < s_.size() &&
               (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
    }

    std::string read_digits()
    {
        std::size_t start = pos_;
        while (peek_digit())
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    void parse_term(bool neg, std::vector<Term>& out)
    {
        skip_ws();
        const Field& k = ring_.field();
        Scalar coeff = Scalar::one(k);
        if (peek_digit()) {
            mpz_class num(read_digits());
            mpz_class den(1);
            skip_ws();
            if (peek('/')) {
                ++pos_;
                skip_ws();
                if (!peek_digit())
                    fail("expected denominator");
                den = mpz_class(read_digits());
            }
            if (num != 0) {
                try {
                    coeff = Scalar::from_fraction(num, den, k);
                } catch (const std::domain_error&) {
                    fail("coefficient is not invertible in " + k.name());
                }
                if (coeff.is_zero())
                    fail("coefficient " + num.get_str() + " is not invertible in " + k.name());
            } else {
                if (den == 0)
                    fail("zero denominator");
                coeff = Scalar::zero(k);
            }
            skip_ws();
            if (!peek('*')) {
                if (!coeff.is_zero())
                    out.push_back({Monomial::one(ring_.nvars()), neg ? -coeff : coeff});
                return;
            }
            ++pos_;
            skip_ws();
        }
        std::vector<int> exps(ring_.nvars(), 0);
        parse_factor(exps);
        while (true) {
            skip_ws();
            if (!peek('*'))
                break;
            ++pos_;
            parse_factor(exps);
        }
        if (!coeff.is_zero())
            out.push_back({Monomial(std::move(exps)), neg ? -coeff : coeff});
    }

    void parse_factor(std::vector<int>& exps)
    {
        skip_ws();
        if (!peek_ident())
            fail("expected variable");
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        auto idx = ring_.index_of(name);
        if (!idx)
            fail("unknown variable '" + name + "'");
        int e = 1;
        skip_ws();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            if (!peek_digit())
                fail("malformed exponent");
            std::string digits = read_digits();
            if (digits.size() > 6)
                fail("exponent too large");
            e = std::stoi(digits);
        }
        exps[*idx] += e;
    }

    std::string_view s_;
    const RingSpec& ring_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingSpec& ring)
{
    return PolyParser(text, ring).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingSpec& ring)
{
    std::vector<Polynomial> out;
    PolyParser parser(text, ring);
    if (parser.at_end())
        return out;
    out.push_back(parser.parse_poly());
    while (parser.consume(','))
        out.push_back(parser.parse_poly());
    if (!parser.at_end())
        throw ParseError("trailing characters in polynomial list '" + std::string(text) + "'");
    return out;
}

// ------------------------------------------------------------ MonomialIdeal

MonomialIdeal::MonomialIdeal(RingSpec ring, std::vector<Monomial> generators) : ring_(std::move(ring))
{
    for (const auto& g : generators)
        if (g.size() != ring_.nvars())
            throw RingMismatch();
    std::sort(generators.begin(), generators.end(),
              [](const Monomial& a, const Monomial& b) { return grlex_compare(a, b) < 0; });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    // ascending degree: a generator can only be divided by an earlier one
    for (const auto& g : generators) {
        bool redundant = false;
        for (const auto& h : gens_)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant)
            gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), GrlexGreater{});
}

MonomialIdeal MonomialIdeal::from_polynomials(RingSpec ring, const std::vector<Polynomial>& gens)
{
    std::vector<Monomial> monos;
    for (const auto& p : gens) {
        if (p.is_zero())
            continue;
        if (!p.is_term())
            throw std::invalid_argument("generator " + p.to_string(ring) + " is not a monomial");
        monos.push_back(p.terms().front().mono);
    }
    return MonomialIdeal(std::move(ring), std::move(monos));
}

MonomialIdeal MonomialIdeal::parse(RingSpec ring, std::string_view text)
{
    auto polys = parse_polynomial_list(text, ring);
    return from_polynomials(std::move(ring), polys);
}

MonomialIdeal MonomialIdeal::of_variables(RingSpec ring, const std::vector<std::size_t>& indices)
{
    std::vector<Monomial> gens;
    for (auto i : indices)
        gens.push_back(Monomial::variable(ring.nvars(), i));
    return MonomialIdeal(std::move(ring), std::move(gens));
}

int MonomialIdeal::max_generator_degree() const
{
    int d = 0;
    for (const auto& g : gens_)
        d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const
{
    if (other.ring_.nvars() != ring_.nvars())
        throw RingMismatch();
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

std::vector<std::size_t> MonomialIdeal::support() const
{
    std::vector<bool> used(ring_.nvars(), false);
    for (const auto& g : gens_)
        for (auto i : g.support())
            used[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i])
            out.push_back(i);
    return out;
}

std::string MonomialIdeal::to_string() const
{
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            s += ", ";
        s += gens_[i].to_string(ring_);
    }
    return s + ">";
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J)
{
    if (!(I.ring() == J.ring()))
        throw RingMismatch();
    auto gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J)
{
    if (!(I.ring() == J.ring()))
        throw RingMismatch();
    std::vector<Monomial> gens;
    for (const auto& m : I.generators())
        for (const auto& n : J.generators())
            gens.push_back(m * n);
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& I, const MonomialIdeal& J)
{
    if (!(I.ring() == J.ring()))
        throw RingMismatch();
    std::vector<Monomial> gens;
    for (const auto& m : I.generators())
        for (const auto& n : J.generators())
            gens.push_back(lcm(m, n));
    return MonomialIdeal(I.ring(), std::move(gens));
}

bool ideal_membership(const Polynomial& p, const MonomialIdeal& I)
{
    for (const auto& t : p.terms()) {
        if (t.mono.size() != I.ring().nvars())
            throw RingMismatch();
        if (!I.contains(t.mono))
            return false;
    }
    return true;
}

std::vector<std::size_t> hilbert_function(const MonomialIdeal& I, int d_max)
{
    std::vector<std::size_t> h;
    for (int d = 0; d <= d_max; ++d) {
        std::size_t count = 0;
        for (const auto& m : monomials_of_degree(I.ring().nvars(), d))
            if (!I.contains(m))
                ++count;
        h.push_back(count);
    }
    return h;
}

FiberIdealReport fiber_ideal_report(const MonomialIdeal& Ip, const MonomialIdeal& I,
                                    const MonomialIdeal& Jp, const MonomialIdeal& J)
{
    if (!I.contains(Ip))
        throw std::invalid_argument("containment violated: I' = " + Ip.to_string() +
                                    " is not contained in I = " + I.to_string());
    if (!J.contains(Jp))
        throw std::invalid_argument("containment violated: J' = " + Jp.to_string() +
                                    " is not contained in J = " + J.to_string());
    FiberIdealReport r;
    r.intersection = ideal_intersection(ideal_sum(Ip, J), ideal_sum(I, Jp));
    r.generated = ideal_sum(ideal_sum(Ip, ideal_product(I, J)), Jp);
    r.equal = r.intersection.contains(r.generated) && r.generated.contains(r.intersection);
    return r;
}

bool fiber_ideal_check(const MonomialIdeal& Ip, const MonomialIdeal& I, const MonomialIdeal& Jp,
                       const MonomialIdeal& J)
{
    return fiber_ideal_report(Ip, I, Jp, J).equal;
}

} // namespace fiberres
