#pragma once

// Exact sparse elimination over F_p or QQ. Internal to the core library.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fiberres/scalar.hpp"

namespace fiberres::detail {

struct ModPOps {
    using value_type = std::uint32_t;
    std::uint32_t p;

    static bool is_zero(value_type a) { return a == 0; }
    value_type add(value_type a, value_type b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= p ? s - p : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(std::uint64_t(a) * b % p);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type inv(value_type a) const
    {
        std::uint64_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<value_type>(r);
    }
    value_type one() const { return 1; }
    value_type from(const Scalar& s) const { return std::get<ModP>(s.raw()).value; }
    Scalar to(value_type v, const Field& k) const { return Scalar::from_int(v, k); }
};

struct RationalOps {
    using value_type = mpq_class;

    static bool is_zero(const value_type& a) { return sgn(a) == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return 1 / a; }
    value_type one() const { return 1; }
    value_type from(const Scalar& s) const { return std::get<mpq_class>(s.raw()); }
    Scalar to(const value_type& v, const Field& k) const
    {
        return Scalar::from_fraction(v.get_num(), v.get_den(), k);
    }
};

/// Calls f with the arithmetic policy for k.
template <class F>
decltype(auto) with_field_ops(const Field& k, F&& f)
{
    if (k.is_prime())
        return f(ModPOps{k.characteristic()});
    return f(RationalOps{});
}

template <class Ops>
using SparseRow = std::vector<std::pair<std::size_t, typename Ops::value_type>>;

/// Incremental row echelon form; pivot rows are normalized to a leading 1.
template <class Ops>
class Echelon {
public:
    using T = typename Ops::value_type;
    using Row = SparseRow<Ops>;

    explicit Echelon(Ops ops) : ops_(std::move(ops)) {}

    /// Reduces `row` (sorted by column, no zeros) and keeps it if independent.
    bool insert(Row row)
    {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                T inv = ops_.inv(row.front().second);
                for (auto& e : row)
                    e.second = ops_.mul(e.second, inv);
                std::size_t c = row.front().first;
                pivots_.emplace(c, std::move(row));
                return true;
            }
            row = axpy(row, ops_.neg(row.front().second), it->second);
        }
        return false;
    }

    std::size_t rank() const { return pivots_.size(); }
    const std::map<std::size_t, Row>& pivots() const { return pivots_; }
    bool has_pivot(std::size_t c) const { return pivots_.count(c) != 0; }

private:
    // a + c * b, both sorted.
    Row axpy(const Row& a, const T& c, const Row& b) const
    {
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, ops_.mul(c, b[j].second));
                ++j;
            } else {
                T v = ops_.add(a[i].second, ops_.mul(c, b[j].second));
                if (!Ops::is_zero(v))
                    out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    Ops ops_;
    std::map<std::size_t, Row> pivots_;
};

template <class Ops>
std::size_t sparse_rank(const Ops& ops, std::vector<SparseRow<Ops>> rows)
{
    Echelon<Ops> e(ops);
    for (auto& r : rows)
        e.insert(std::move(r));
    return e.rank();
}

/// Solves A x = b where A has `ncols` unknowns and is given by rows; each entry
/// of `rhs` belongs to the matching row. Free unknowns are set to zero.
template <class Ops>
std::optional<std::vector<typename Ops::value_type>> sparse_solve(const Ops& ops,
                                                                   std::vector<SparseRow<Ops>> rows,
                                                                   const std::vector<typename Ops::value_type>& rhs,
                                                                   std::size_t ncols)
{
    using T = typename Ops::value_type;
    Echelon<Ops> e(ops);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto row = std::move(rows[r]);
        if (!Ops::is_zero(rhs[r]))
            row.emplace_back(ncols, rhs[r]);
        e.insert(std::move(row));
    }
    if (e.has_pivot(ncols))
        return std::nullopt;
    std::vector<T> x(ncols, T(0));
    const auto& piv = e.pivots();
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
        T v(0);
        for (const auto& [c, a] : it->second) {
            if (c == it->first)
                continue;
            if (c == ncols)
                v = ops.add(v, a);
            else if (!Ops::is_zero(x[c]))
                v = ops.sub(v, ops.mul(a, x[c]));
        }
        x[it->first] = v;
    }
    return x;
}

} // namespace fiberres::detail
