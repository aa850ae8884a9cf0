#include "fiberres/betti_table.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fiberres {

BettiTable BettiTable::from_totals(const std::vector<std::int64_t>& totals)
{
    BettiTable t;
    for (std::size_t l = 0; l < totals.size(); ++l) {
        if (totals[l] < 0)
            throw std::invalid_argument("negative Betti number");
        if (totals[l] != 0)
            t.totals_[static_cast<int>(l)] = totals[l];
    }
    return t;
}

void BettiTable::add(int ell, int k, std::int64_t count)
{
    if (count < 0)
        throw std::invalid_argument("negative Betti number");
    if (count == 0)
        return;
    graded_[{ell, k}] += count;
    totals_[ell] += count;
}

std::int64_t BettiTable::total(int ell) const
{
    auto it = totals_.find(ell);
    return it == totals_.end() ? 0 : it->second;
}

std::int64_t BettiTable::graded(int ell, int k) const
{
    auto it = graded_.find({ell, k});
    return it == graded_.end() ? 0 : it->second;
}

int BettiTable::max_degree() const
{
    return totals_.empty() ? -1 : totals_.rbegin()->first;
}

std::vector<std::int64_t> BettiTable::totals_vector() const
{
    std::vector<std::int64_t> v(static_cast<std::size_t>(max_degree() + 1), 0);
    for (const auto& [l, n] : totals_)
        if (l >= 0)
            v[static_cast<std::size_t>(l)] = n;
    return v;
}

std::string BettiTable::render() const
{
    std::ostringstream os;
    if (totals_.empty())
        return "(zero)\n";
    const int lmin = std::min(0, totals_.begin()->first);
    const int lmax = max_degree();
    constexpr int w = 6;
    os << std::setw(w) << "";
    for (int l = lmin; l <= lmax; ++l)
        os << std::setw(w) << l;
    os << '\n';
    if (graded_.empty()) {
        os << std::setw(w) << "total:";
        for (int l = lmin; l <= lmax; ++l)
            os << std::setw(w) << total(l);
        os << '\n';
        return os.str();
    }
    int rmin = 0, rmax = 0;
    bool first = true;
    for (const auto& [lk, n] : graded_) {
        int r = lk.second - lk.first;
        rmin = first ? r : std::min(rmin, r);
        rmax = first ? r : std::max(rmax, r);
        first = false;
    }
    for (int r = rmin; r <= rmax; ++r) {
        os << std::setw(w - 1) << r << ':';
        for (int l = lmin; l <= lmax; ++l) {
            auto n = graded(l, l + r);
            if (n == 0)
                os << std::setw(w) << '.';
            else
                os << std::setw(w) << n;
        }
        os << '\n';
    }
    os << std::setw(w) << "total:";
    for (int l = lmin; l <= lmax; ++l)
        os << std::setw(w) << total(l);
    os << '\n';
    return os.str();
}

} // namespace fiberres
