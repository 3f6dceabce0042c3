#ifndef QTORIC_LINALG_HPP
#define QTORIC_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qtoric/errors.hpp"

namespace qtoric {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p" or "p/q"; result is canonicalized.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

bool is_integer(const Rational& r);

template <class T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0))
    {
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw InvalidInput("ragged matrix initializer");
            for (const auto& x : row)
                data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const
    {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y)
    {
        if (x.cols_ != y.rows_)
            throw InvalidInput("matrix dimension mismatch in product");
        Matrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }

    friend bool operator==(const Matrix& x, const Matrix& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

    friend bool operator<(const Matrix& x, const Matrix& y) { return x.data_ < y.data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

RatMatrix to_rational(const IntMatrix& m);
// Throws MathError if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

RatVector row_times(const RatVector& v, const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);

// Basis of {x : m x = 0}.
std::vector<RatVector> rational_kernel(const RatMatrix& m);

// Some x with x m = v, if any.
std::optional<RatVector> solve_left(const RatMatrix& m, const RatVector& v);

// Row-style HNF: row i has its last nonzero entry (the pivot) in a column that
// increases with i, pivots are positive, and every entry sitting in a pivot
// column below the pivot is reduced into [0, pivot). For a square full-rank
// input this is lower triangular. Rank-deficient input throws.
IntMatrix hermite_normal_form(const IntMatrix& m);

// Same convention, but dependent generators are allowed and dropped.
IntMatrix lattice_basis(const IntMatrix& generators);

std::optional<IntVector> solve_integral(const IntMatrix& basis, const IntVector& v);

// Least common multiple of all denominators.
Integer common_denominator(const RatMatrix& m);

}  // namespace qtoric

#endif
