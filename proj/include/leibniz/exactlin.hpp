#pragma once

#include <leibniz/rational.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace leibniz {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Builds from nested rows; all rows must have equal length.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    void set_row(std::size_t r, const Vector& v);
    void set_col(std::size_t c, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;
    Rational trace() const;

    /// Row-major flattening: entry (r, c) lands at r * cols + c.
    Vector flatten() const;
    static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    friend Matrix operator*(const Rational& s, const Matrix& m);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

using LinearMap = Matrix;

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);

/// A linear subspace of Q^n held by its canonical reduced row-echelon basis.
class Subspace {
public:
    Subspace() = default;
    /// The zero subspace of Q^ambient.
    explicit Subspace(std::size_t ambient);

    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace from_matrix_rows(const Matrix& rows);
    static Subspace full(std::size_t ambient);
    /// Span of the standard basis vectors at the given indices.
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_; }

    const Matrix& basis() const noexcept { return basis_; }
    std::vector<Vector> vectors() const;
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& x) const;
    bool contains(const Subspace& other) const;

    /// Reduces x modulo this subspace; the result vanishes on every pivot
    /// column.
    Vector reduce(const Vector& x) const;
    /// Coordinates of x in the canonical basis; nullopt when x is outside.
    std::optional<Vector> coordinates(const Vector& x) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const Vector& x);
bool equal(const Subspace& u, const Subspace& v);
/// Orthogonal complement for the standard dot product.
Subspace annihilator(const Subspace& u);

Subspace nullspace(const Matrix& m);

/// Some x with a * x = b, free variables set to zero; nullopt when the
/// system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Dense polynomial, coefficients in ascending degree.
using Polynomial = std::vector<Rational>;

/// Characteristic polynomial det(x*I - m) via the division-free Berkowitz
/// recurrence. Monic, degree n.
Polynomial characteristic_polynomial(const Matrix& m);

/// All distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

struct Eigenpair {
    Rational value;
    Subspace space;
};

struct EigenResult {
    std::vector<Eigenpair> pairs;  // eigenvalues ascending
    /// Sum of eigenspace dimensions is below n: the map is not
    /// diagonalizable over the rationals.
    bool incomplete = false;
};

EigenResult rational_eigen(const Matrix& m);

/// Incremental sparse Gaussian elimination for tall constraint systems
/// (many equations, few unknowns). Rows are fed one at a time and kept in
/// echelon form; nullspace() finishes the reduction.
class SparseEliminator {
public:
    using SparseRow = std::map<std::size_t, Rational>;

    explicit SparseEliminator(std::size_t unknowns) : unknowns_(unknowns) {}

    /// Returns true when the row increased the rank.
    bool add_row(SparseRow row);

    std::size_t unknowns() const noexcept { return unknowns_; }
    std::size_t rank() const noexcept { return pivot_rows_.size(); }

    /// Canonical basis of the solution space of all rows added so far.
    Subspace nullspace() const;

private:
    std::size_t unknowns_;
    std::map<std::size_t, SparseRow> pivot_rows_;  // pivot column -> row with leading 1
};

}  // namespace leibniz
