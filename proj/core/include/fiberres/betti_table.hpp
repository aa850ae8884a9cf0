#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fiberres {

/// Total and graded Betti numbers beta_l and beta_{l,k}.
///
/// A table built from totals alone has no graded entries; one built with add()
/// keeps totals[l] equal to the sum of its graded row.
class BettiTable {
public:
    BettiTable() = default;

    /// Totals-only table, index = homological degree.
    static BettiTable from_totals(const std::vector<std::int64_t>& totals);

    void add(int ell, int k, std::int64_t count = 1);

    bool has_grading() const { return !graded_.empty() || totals_.empty(); }
    std::int64_t total(int ell) const;
    std::int64_t graded(int ell, int k) const;
    const std::map<int, std::int64_t>& totals() const { return totals_; }
    const std::map<std::pair<int, int>, std::int64_t>& graded_entries() const { return graded_; }

    /// Largest homological degree with a nonzero total, or -1 for the empty table.
    int max_degree() const;
    /// Totals as a dense vector indexed by l = 0..max_degree().
    std::vector<std::int64_t> totals_vector() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

    /// Conventional display: columns l, rows k - l.
    std::string render() const;

private:
    std::map<int, std::int64_t> totals_;
    std::map<std::pair<int, int>, std::int64_t> graded_;
};

} // namespace fiberres
