#pragma once

// Exact linear algebra over Q for the small per-weight blocks of sl2 modules.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace jc::la {

// mpq_class keeps numerator/denominator coprime with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

// Always "num/den", also for integers ("3/1", "0/1").
std::string toCanonicalString(Rational q);
Rational parseRational(const std::string& text);

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix fromDense(const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // Storing zero erases the entry.
    void set(std::size_t r, std::size_t c, const Rational& value);
    Rational at(std::size_t r, std::size_t c) const;

    const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const {
        return entries_;
    }
    std::size_t nonZeros() const { return entries_.size(); }
    bool isZero() const { return entries_.empty(); }

    SparseMatrix transposed() const;
    SparseMatrix operator-() const;
    SparseMatrix scaled(const Rational& s) const;
    std::vector<Vector> toDense() const;
    Vector apply(const Vector& v) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

private:
    void checkIndex(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

/// A linear subspace of Q^n held as the nonzero rows of its reduced row
/// echelon form. Two Subspace values compare equal iff they span the same
/// space.
class Subspace {
public:
    explicit Subspace(std::size_t ambientDim = 0) : ambient_(ambientDim) {}

    static Subspace span(std::size_t ambientDim, const std::vector<Vector>& vectors);
    static Subspace full(std::size_t ambientDim);

    std::size_t ambientDim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    // Column of the leading 1 in each basis row.
    std::vector<std::size_t> pivotColumns() const;

    bool contains(const Vector& v) const;
    bool isCanonical() const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rowReduce(std::vector<Vector>& rows, std::size_t cols);

Subspace kernel(const SparseMatrix& m);
Subspace image(const SparseMatrix& m);
// Spanned by the standard basis vectors e_j whose index j is not a pivot
// column of the image, so the basis doubles as a set of quotient
// representatives.
Subspace cokernelBasis(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);

}  // namespace jc::la
