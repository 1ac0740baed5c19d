#pragma once

#include <optional>
#include <span>
#include <vector>

#include "capcodes/field.hpp"

namespace capcodes {

/// Dense row-major matrix of field elements. Holds no field reference;
/// the routines below take the field explicitly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<Elem> column(std::size_t c) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// Reduces m in place to reduced row echelon form. Pivots are taken column by
/// column, choosing the first row with a nonzero entry. Returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Basis of the right null space {x : m x = 0}; one vector per free column,
/// in increasing free-column order, with a 1 in that free column.
std::vector<std::vector<Elem>> null_space(const Field& f, Matrix m);

/// Solution set of m x = rhs as particular solution plus null space basis;
/// nullopt when inconsistent.
struct LinearSolution {
    std::vector<Elem> particular;
    std::vector<std::vector<Elem>> kernel;
};
std::optional<LinearSolution> solve(const Field& f, const Matrix& m, std::span<const Elem> rhs);

}  // namespace capcodes
