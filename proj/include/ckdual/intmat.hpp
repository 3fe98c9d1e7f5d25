#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ckdual {

/// Exact arbitrary-precision integer scalar. All core arithmetic runs on
/// this type; fixed-width integers are confined to indices and sizes.
using Int = mpz_class;

using IntVector = std::vector<Int>;

/// Dense row-major integer matrix with exact arithmetic. Zero-dimensional
/// shapes (0xN, Nx0, 0x0) are legal everywhere.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<long> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix operator-() const;

    IntVector apply(const IntVector& x) const;
    IntVector column(std::size_t j) const;
    IntVector row_vector(std::size_t i) const;

    /// Columns of `this` followed by columns of `other` (row counts must match).
    IntMatrix hstack(const IntMatrix& other) const;

    bool is_zero() const;
    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> data_;
};

/// S * M * T = D with S, T unimodular and D diagonal, nonnegative,
/// d_i | d_{i+1}. The inverse transforms are tracked alongside so kernels,
/// lattice solves and sections never need a separate inversion.
struct SmithDecomposition {
    IntMatrix S;
    IntMatrix D;
    IntMatrix T;
    IntMatrix S_inv;
    IntMatrix T_inv;
    std::size_t source_rows = 0;
    std::size_t source_cols = 0;

    std::size_t rank() const;
    /// Diagonal of D as a vector of length min(rows, cols).
    std::vector<Int> diagonal() const;
};

/// Canonical row-echelon form of the row lattice: transform * M = H,
/// transform unimodular. Convention: pivots positive, entries above each
/// pivot reduced into [0, pivot), zero rows sorted last. Two matrices have
/// equal row lattices iff their H agree (up to zero-row padding).
struct HermiteForm {
    IntMatrix H;
    IntMatrix transform;
    IntMatrix transform_inv;
};

SmithDecomposition snf(const IntMatrix& M);
HermiteForm hnf_rows(const IntMatrix& M);

/// Columns form a lattice basis of {x : Mx = 0} over the integers.
IntMatrix kernel_basis(const IntMatrix& M);
IntMatrix kernel_basis(const SmithDecomposition& dec);

/// Integer solution x with Mx = b, or nullopt when b is outside the column
/// lattice of M. Throws on dimension mismatch. The decision is exact.
std::optional<IntVector> solve_in_column_lattice(const IntMatrix& M, const IntVector& b);
std::optional<IntVector> solve_in_column_lattice(const SmithDecomposition& dec, const IntVector& b);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
Int determinant(const IntMatrix& M);

bool is_unimodular(const IntMatrix& M);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector negate(const IntVector& v);
IntVector scale(const Int& c, const IntVector& v);
bool is_zero_vector(const IntVector& v);
std::string to_string(const IntVector& v);

}  // namespace ckdual
