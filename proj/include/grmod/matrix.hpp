#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grmod/field.hpp"

namespace grmod {

// Dense exact matrix. Row-major; all entries share one Field.
// Operations are pure: nothing mutates after construction except through
// the explicit setters used while assembling.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix zero(const Field& f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    bool is_identity() const;

    std::vector<Scalar> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Scalar>& v);

    // Vertical / horizontal concatenation.
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<std::vector<Scalar>>& rows);

    std::string str() const;

private:
    Field field_ = Field::rationals();
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

// Reduced row echelon form together with the pivot columns.
struct Rref {
    Matrix mat;              // rref rows, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column per kept row
};

Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of { v : m v = 0 } as column vectors (returned as rows of length cols).
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

// Some x with m x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

bool invertible(const Matrix& m);

// Row-space helpers (vectors are rows).
struct RowSpace {
    explicit RowSpace(const Field& f, std::size_t ambient);
    RowSpace(const Field& f, std::size_t ambient, const std::vector<std::vector<Scalar>>& rows);

    std::size_t dim() const { return basis.mat.rows(); }
    std::size_t ambient() const { return ambient_; }
    bool contains(const std::vector<Scalar>& v) const;
    // Residue of v after elimination against the basis.
    std::vector<Scalar> reduce(const std::vector<Scalar>& v) const;
    // Adds v if independent; returns true when the dimension grew.
    bool add(const std::vector<Scalar>& v);
    // Coordinates of v in terms of the ORIGINAL generating rows (only
    // available from coordinates_of on a RowSpace built via from_rows).
    Rref basis;

private:
    Field field_;
    std::size_t ambient_ = 0;
};

// Quotient of K^ambient by the row span of `sub`: projection (ambient x q)
// and section (q x ambient) with section * projection = identity on K^q.
// Vectors are rows; apply as v * projection.
struct SubspaceQuotient {
    Matrix projection;
    Matrix section;
    std::size_t quotient_dim = 0;
};

SubspaceQuotient subspace_quotient(const Field& f, std::size_t ambient_dim,
                                   const std::vector<std::vector<Scalar>>& sub);

// Coordinates of v in the row space spanned by `basis` (rows, linearly
// independent); nullopt if v is outside.
std::optional<std::vector<Scalar>> coordinates_in_rowspace(const Matrix& basis,
                                                           const std::vector<Scalar>& v);

// Row-wise coordinates of every row of `rows` in the span of `basis`, with
// one elimination for the whole batch.
std::optional<Matrix> coordinates_rows_in_rowspace(const Matrix& basis, const Matrix& rows);

} // namespace grmod
