#pragma once

#include <optional>
#include <vector>

#include "ainfcat/scalar.hpp"

namespace ainfcat {

/// Dense exact matrix. Graded maps act on row vectors: image of basis
/// element i is row i, so composition "first f then g" is f.mul(g).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}
    static Matrix identity(std::size_t n, const Field& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix mul(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<Scalar> a_;
};

/// In-place reduced row echelon form; returns the pivot column indices in
/// increasing order. Pivot selection is first nonzero entry per column,
/// scanning columns left to right, so results are reproducible.
std::vector<std::size_t> rref(Matrix& m);

/// Solve A x = b exactly with all free variables set to zero; absent when
/// the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const Matrix& A, const std::vector<Scalar>& b);

/// Basis of { x : A x = 0 }, one vector per free column, in free-column order.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& A);

std::size_t rank(Matrix m);

std::optional<Matrix> inverse(const Matrix& A);

}  // namespace ainfcat
