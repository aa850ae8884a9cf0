#include "fiberres/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiberres {

PowerSeries::PowerSeries(int truncation)
{
    if (truncation < 0)
        throw std::invalid_argument("negative truncation degree");
    c_.assign(static_cast<std::size_t>(truncation) + 1, 0);
}

PowerSeries::PowerSeries(std::vector<std::int64_t> coeffs, int truncation) : PowerSeries(truncation)
{
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i)
        c_[i] = coeffs[i];
}

PowerSeries PowerSeries::one(int truncation)
{
    PowerSeries s(truncation);
    s.c_[0] = 1;
    return s;
}

PowerSeries PowerSeries::one_plus_t_pow(int n, int truncation)
{
    if (n < 0)
        throw std::invalid_argument("negative exponent");
    PowerSeries s(truncation);
    std::int64_t b = 1;
    for (int k = 0; k <= std::min(n, truncation); ++k) {
        s.c_[k] = b;
        b = b * (n - k) / (k + 1);
    }
    return s;
}

bool PowerSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

PowerSeries PowerSeries::truncated(int d) const
{
    return PowerSeries(c_, std::min(d, truncation()));
}

PowerSeries PowerSeries::times_t() const
{
    PowerSeries s(truncation());
    for (int i = 1; i <= truncation(); ++i)
        s.c_[i] = c_[i - 1];
    return s;
}

PowerSeries PowerSeries::divided_by_t() const
{
    if (c_[0] != 0)
        throw std::domain_error("series is not divisible by t");
    if (truncation() == 0)
        throw std::domain_error("division by t needs truncation degree >= 1");
    PowerSeries s(truncation() - 1);
    for (int i = 0; i < s.truncation() + 1; ++i)
        s.c_[i] = c_[i + 1];
    return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries s(std::min(a.truncation(), b.truncation()));
    for (std::size_t i = 0; i < s.c_.size(); ++i)
        s.c_[i] = a.c_[i] + b.c_[i];
    return s;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries s(std::min(a.truncation(), b.truncation()));
    for (std::size_t i = 0; i < s.c_.size(); ++i)
        s.c_[i] = a.c_[i] - b.c_[i];
    return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries s(std::min(a.truncation(), b.truncation()));
    const int D = s.truncation();
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j)
            s.c_[i + j] += a.c_[i] * b.c_[j];
    return s;
}

std::string PowerSeries::to_string() const
{
    std::string s;
    for (int i = 0; i <= truncation(); ++i) {
        std::int64_t c = c_[i];
        if (c == 0)
            continue;
        if (!s.empty())
            s += c < 0 ? " - " : " + ";
        else if (c < 0)
            s += "-";
        std::int64_t m = c < 0 ? -c : c;
        if (i == 0 || m != 1)
            s += std::to_string(m);
        if (i >= 1)
            s += "t";
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    if (s.empty())
        s = "0";
    return s + " (mod t^" + std::to_string(truncation() + 1) + ")";
}

} // namespace fiberres
