#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfk/field_matrix.hpp"
#include "hopfk/finite_field.hpp"

namespace hopfk {

using la::EchelonBasis;
using la::FieldMatrix;
using la::FiniteField;
using la::Fq;
using la::vec_add;
using la::vec_is_zero;
using la::vec_scale;
using la::vec_sub;

/* Finite-dimensional associative unital algebra over F_q, presented by
 * structure constants.  The multiplication table is stored as an (n^2 x n)
 * matrix whose row i*n+j holds the coordinates of a_i * a_j.  Construction
 * goes through validate(), which finds the two-sided unit and certifies
 * associativity on all basis triples.
 */
class Algebra {
public:
    // Throws MathError("NoUnit") when no two-sided unit exists and
    // MathError("NotAssociative") naming the first bad triple.  The unit
    // search runs first; a table can be rejected for NoUnit even when it is
    // also non-associative.
    static Algebra validate(const FiniteField& F, const FieldMatrix& table,
                            std::vector<std::string> basis_names = {});

    const FiniteField& field() const { return table_.field(); }
    size_t dim() const { return dim_; }
    const FieldMatrix& table() const { return table_; }
    const std::vector<Fq>& unit() const { return unit_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    // Coordinates of a_i * a_j.
    std::vector<Fq> mult(size_t i, size_t j) const { return table_.row(i * dim_ + j); }
    std::vector<Fq> mul(const std::vector<Fq>& a, const std::vector<Fq>& b) const;

    // Operators in the row convention: x*rmul(a) = x*a and x*lmul(a) = a*x.
    FieldMatrix rmul(const std::vector<Fq>& a) const;
    FieldMatrix lmul(const std::vector<Fq>& a) const;
    FieldMatrix rmul_basis(size_t i) const;
    FieldMatrix lmul_basis(size_t i) const;

    std::optional<std::vector<Fq>> element_inverse(const std::vector<Fq>& a) const;

    // Basis elements that generate A as a unital algebra, found greedily.
    // Intertwining with these forces intertwining with everything.
    std::vector<std::vector<Fq>> generators() const;

    bool operator==(const Algebra& o) const;

private:
    Algebra(FieldMatrix table, size_t dim, std::vector<Fq> unit, std::vector<std::string> names)
        : table_(std::move(table)), dim_(dim), unit_(std::move(unit)), names_(std::move(names)) {}

    FieldMatrix table_;
    size_t dim_;
    std::vector<Fq> unit_;
    std::vector<std::string> names_;
};

struct QuotientAlgebra {
    Algebra quotient;
    FieldMatrix proj;     // n x m, row i = image of a_i, row convention
    FieldMatrix section;  // m x n, row k = chosen lift of the k-th quotient basis vector
};

struct Subalgebra {
    Algebra sub;
    FieldMatrix basis_rows;  // m x n, row k = k-th subalgebra basis vector in A-coordinates
};

// Unital subalgebra structure on the span of the given rows (echelonized).
// The span must be closed under multiplication and contain its own unit;
// throws MathError("NotClosed") otherwise.  The unit of the subalgebra may
// differ from the unit of A (corner subalgebras).
Subalgebra subalgebra_on_span(const Algebra& A, const FieldMatrix& rows);

// Quotient by a two-sided ideal spanned by the given rows.  The quotient
// basis is the set of non-pivot coordinates of the echelonized ideal, so
// the construction is canonical.  Throws MathError("NotAnIdeal") when the
// span is not closed under multiplication by A on either side.
QuotientAlgebra quotient_algebra(const Algebra& A, const FieldMatrix& ideal_rows);

}  // namespace hopfk
