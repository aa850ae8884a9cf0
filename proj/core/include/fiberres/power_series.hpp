#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fiberres {

/// Integer power series in t known through t^D (the truncation degree).
class PowerSeries {
public:
    PowerSeries() : PowerSeries(0) {}
    explicit PowerSeries(int truncation);
    /// Coefficients beyond the truncation are dropped; missing ones are zero.
    PowerSeries(std::vector<std::int64_t> coeffs, int truncation);

    static PowerSeries one(int truncation);
    /// (1 + t)^n
    static PowerSeries one_plus_t_pow(int n, int truncation);

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t operator[](int i) const { return i >= 0 && i <= truncation() ? c_[i] : 0; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    PowerSeries truncated(int d) const;
    /// Multiplication by t keeps the truncation degree.
    PowerSeries times_t() const;
    /// Exact division by t; the result is known one degree less.
    /// Throws std::domain_error when the constant term is nonzero.
    PowerSeries divided_by_t() const;

    /// Results are truncated to the smaller of the two truncation degrees.
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    /// e.g. "1 + 4t + 4t^2 + t^3 (mod t^5)"
    std::string to_string() const;

private:
    std::vector<std::int64_t> c_;
};

} // namespace fiberres
