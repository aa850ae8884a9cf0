#pragma once

#include <cstddef>
#include <vector>

#include "fiberres/ring.hpp"

namespace fiberres {

/// Dense matrix of polynomials, row-major. Either dimension may be zero.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static PolyMatrix identity(std::size_t n, const RingSpec& ring);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    bool is_zero() const;
    /// Some entry has a nonzero constant term.
    bool has_unit_entry() const;

    PolyMatrix operator-() const;
    PolyMatrix scaled(const Scalar& c) const;
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    /// Copies `block` with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& block);
    PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> data_;
};

} // namespace fiberres
