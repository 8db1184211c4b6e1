#ifndef LRCKIT_MATRIX_HPP
#define LRCKIT_MATRIX_HPP

#include "lrckit/field.hpp"

#include <cstddef>
#include <vector>

namespace lrc {

/// Dense row-major matrix over a single field context.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Elem &at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Elem at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n);
    bool operator==(const Matrix &o) const = default;
};

Matrix transpose(const Matrix &m);
Matrix mat_mul(const Field &f, const Matrix &x, const Matrix &y);

/// Row rank by Gaussian elimination, first nonzero pivot per column.
std::size_t rank(const Field &f, Matrix m);

/// Reduced row echelon form; pivot column indices appended to *pivots.
Matrix rref(const Field &f, Matrix m, std::vector<std::size_t> *pivots = nullptr);

/// Basis of the right kernel {x : m x = 0}, one vector per row
/// ((cols - rank) x cols). Deterministic: free columns in ascending order.
Matrix null_space(const Field &f, const Matrix &m);

/// Restriction to a subset of columns, in the given order.
Matrix take_columns(const Matrix &m, const std::vector<std::uint32_t> &idx);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    std::vector<Elem> x; // a particular solution unless inconsistent
};

/// Exact solution of A x = b. Underdetermined systems report a particular
/// solution with free variables set to zero.
SolveResult solve(const Field &f, const Matrix &a, const std::vector<Elem> &b);

} // namespace lrc

#endif
