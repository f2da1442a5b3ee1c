#pragma once

#include "finik/laurent.hpp"
#include "finik/rational.hpp"

#include <vector>

namespace finik {

// Dense rectangular matrix over an exact ring (Rat or Laurent).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T())
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill)
    {
        if (rows < 0 || cols < 0)
            throw dimension_error("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rat>;
using LaurentMatrix = Matrix<Laurent>;

// Exact determinant: cofactor expansion for size <= 4, fraction-free
// Bareiss elimination above that.
Rat det(const RationalMatrix& m);
Laurent det(const LaurentMatrix& m);

// Exact reduced row-echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& m);

// Basis of the right nullspace, one Matrix column vector per basis element.
std::vector<std::vector<Rat>> nullspace(const RationalMatrix& m);

} // namespace finik
