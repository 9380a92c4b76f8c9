#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hopfk/errors.hpp"

namespace hopfk::la {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Dense integer matrix with arbitrary-precision entries.  Intermediate
 * blow-up in the normal-form algorithms is routine even at 6x6, so no
 * fixed-width path exists.
 */
class IntMatrix {
public:
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Int& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    Int& at(size_t r, size_t c) { return a_[r * cols_ + c]; }

    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    // Fraction-free Gaussian elimination; square matrices only.
    Int det_bareiss() const;

    std::string to_string() const;

private:
    size_t rows_, cols_;
    std::vector<Int> a_;
};

struct SnfResult {
    IntMatrix S, U, V;  // U*M*V = S, |det U| = |det V| = 1
    std::vector<Int> invariant_factors;  // nonzero diagonal entries, d1 | d2 | ...
};

// Smith normal form with unimodular transforms.  The returned S is diagonal
// with nonnegative entries in divisibility order; the factorization and the
// divisibility chain are re-verified before returning.
SnfResult snf(const IntMatrix& M);

struct HnfResult {
    IntMatrix H;  // row-style Hermite form of the input, same shape
    IntMatrix U;  // unimodular with U*M = H
    size_t rank;
    std::vector<size_t> pivot_cols;  // one per nonzero row of H
};

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot).
HnfResult hnf_rows(const IntMatrix& M);

struct MinMultiple {
    Int m;                  // least positive integer with m*v in the row lattice
    std::vector<Int> a;     // integer coefficients with a*rows = m*v
};

// Least positive m with m*v in the integer row span of `rows`, found through
// the Hermite form and rational back-substitution; nullopt when no positive
// multiple lies in the lattice.
std::optional<MinMultiple> lattice_min_multiple(const IntMatrix& rows, const std::vector<Int>& v);

}  // namespace hopfk::la
