#pragma once

#include "qbundle/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qb {

/// Signals an inconsistent linear system.
struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(u).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    bool is_zero() const;
    bool is_diagonal() const;

    Matrix transpose() const;
    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Kronecker product; index (i, k) of the result is i * b.rows() + k.
    friend Matrix kron(const Matrix& a, const Matrix& b);
    /// Block-diagonal direct sum.
    friend Matrix direct_sum(const Matrix& a, const Matrix& b);

    /// Entrywise specialization u = u0.
    std::vector<std::vector<mpq_class>> eval_at(const mpq_class& u0) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Reduced row echelon form with the list of pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of the right kernel {v : m v = 0}; each vector has a 1 in one free column.
std::vector<Vector> kernel(const Matrix& m);
/// Some x with m x = rhs; throws NoSolution if the system is inconsistent.
Vector solve(const Matrix& m, const Vector& rhs);
/// Inverse of a square matrix; throws NoSolution if singular.
Matrix inverse(const Matrix& m);

bool is_zero(const Vector& v);

}  // namespace qb
