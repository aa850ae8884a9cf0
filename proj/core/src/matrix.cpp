#include "fiberres/matrix.hpp"

#include <stdexcept>

namespace fiberres {

PolyMatrix PolyMatrix::identity(std::size_t n, const RingSpec& ring)
{
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Polynomial::constant(Scalar::one(ring.field()), ring.nvars());
    return m;
}

bool PolyMatrix::is_zero() const
{
    for (const auto& p : data_)
        if (!p.is_zero())
            return false;
    return true;
}

bool PolyMatrix::has_unit_entry() const
{
    for (const auto& p : data_)
        if (p.has_constant_term())
            return true;
    return false;
}

PolyMatrix PolyMatrix::operator-() const
{
    PolyMatrix r = *this;
    for (auto& p : r.data_)
        p = -p;
    return r;
}

PolyMatrix PolyMatrix::scaled(const Scalar& c) const
{
    PolyMatrix r = *this;
    for (auto& p : r.data_)
        p = c * p;
    return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    PolyMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& bkj = b(k, j);
                if (!bkj.is_zero())
                    r(i, j) += aik * bkj;
            }
        }
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    PolyMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i)
        r.data_[i] += b.data_[i];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b)
{
    return a + (-b);
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& block)
{
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
        throw std::out_of_range("block does not fit");
    for (std::size_t i = 0; i < block.rows_; ++i)
        for (std::size_t j = 0; j < block.cols_; ++j)
            (*this)(r0 + i, c0 + j) = block(i, j);
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::out_of_range("block out of range");
    PolyMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

} // namespace fiberres
