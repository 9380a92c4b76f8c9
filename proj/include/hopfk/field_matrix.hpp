#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfk/finite_field.hpp"

namespace hopfk::la {

struct Rref;

/* Dense row-major matrix over one FiniteField.  All arithmetic is exact.
 * Vectors follow the row convention used throughout: module elements are
 * rows and act by v * M.
 */
class FieldMatrix {
public:
    FieldMatrix(FiniteField field, size_t rows, size_t cols)
        : F_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FieldMatrix identity(const FiniteField& F, size_t n);

    const FiniteField& field() const { return F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Fq at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    Fq& at(size_t r, size_t c) { return a_[r * cols_ + c]; }

    std::vector<Fq> row(size_t r) const;
    std::vector<Fq> col(size_t c) const;
    void set_row(size_t r, const std::vector<Fq>& v);

    FieldMatrix mul(const FieldMatrix& o) const;
    FieldMatrix add(const FieldMatrix& o) const;
    FieldMatrix sub(const FieldMatrix& o) const;
    FieldMatrix scaled(Fq c) const;
    FieldMatrix transpose() const;
    // Kronecker product; block (i,j) is a[i][j] * B, so tensor basis
    // indices flatten with the left factor major: (i,k) -> i*B.rows + k.
    FieldMatrix kronecker(const FieldMatrix& o) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const FieldMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && F_ == o.F_ && a_ == o.a_;
    }
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

    Rref rref() const;
    size_t rank() const;

    // Rows spanning { v : M v^T = 0 }, echelonized deterministically.
    FieldMatrix kernel_basis() const;
    // One solution x of M x = b, if consistent.  Every returned solution is
    // re-substituted into the system before being handed back.
    std::optional<std::vector<Fq>> solve(const std::vector<Fq>& b) const;
    std::optional<FieldMatrix> inverse() const;

    // v * M for a row vector v of length rows().
    std::vector<Fq> apply_row(const std::vector<Fq>& v) const;
    // M * x for a column vector x of length cols().
    std::vector<Fq> apply_col(const std::vector<Fq>& x) const;

    static FieldMatrix from_rows(const FiniteField& F, size_t cols,
                                 const std::vector<std::vector<Fq>>& rows);
    FieldMatrix vstack(const FieldMatrix& below) const;

private:
    FiniteField F_;
    size_t rows_, cols_;
    std::vector<Fq> a_;
};

struct Rref {
    FieldMatrix reduced;
    std::vector<size_t> pivot_cols;
    size_t rank;
};

// Row vector helpers shared by the module code.
std::vector<Fq> vec_add(const FiniteField& F, const std::vector<Fq>& a, const std::vector<Fq>& b);
std::vector<Fq> vec_sub(const FiniteField& F, const std::vector<Fq>& a, const std::vector<Fq>& b);
std::vector<Fq> vec_scale(const FiniteField& F, Fq c, const std::vector<Fq>& a);
bool vec_is_zero(const std::vector<Fq>& a);

/* Incrementally maintained reduced row echelon basis of a subspace of F^n.
 * Rows are kept fully reduced with strictly increasing pivot columns, so a
 * subspace has exactly one representation and reports are reproducible.
 */
class EchelonBasis {
public:
    EchelonBasis(FiniteField field, size_t width) : F_(std::move(field)), width_(width) {}

    size_t width() const { return width_; }
    size_t dim() const { return rows_.size(); }

    // Reduce v against the basis; returns the residual (zero iff contained).
    std::vector<Fq> reduce(std::vector<Fq> v) const;
    bool contains(const std::vector<Fq>& v) const { return vec_is_zero(reduce(v)); }

    // Insert the span of v; returns true when the dimension grew.
    bool insert(std::vector<Fq> v);

    const std::vector<std::vector<Fq>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    FieldMatrix as_matrix() const;

    // Coordinates of a contained vector in terms of the stored rows.
    std::optional<std::vector<Fq>> coordinates(const std::vector<Fq>& v) const;

    // Complement coordinates: columns that are not pivots, in order.
    std::vector<size_t> non_pivots() const;

private:
    FiniteField F_;
    size_t width_;
    std::vector<std::vector<Fq>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace hopfk::la
