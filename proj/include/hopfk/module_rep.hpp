#pragma once

#include <memory>
#include <vector>

#include "hopfk/algebra.hpp"
#include "hopfk/field_matrix.hpp"

namespace hopfk {

using AlgebraPtr = std::shared_ptr<const Algebra>;

/* Right module over a structure-constant algebra, given as one action
 * matrix per algebra basis element.  Row vectors act on the right:
 * v * a_i = v * R_i.  The zero module (dim 0) is legal; it shows up as a
 * syzygy of a projective cover.
 */
class ModuleRep {
public:
    // Checks R_i R_j = sum_k c[i][j][k] R_k and unitality; throws
    // MathError("NotAModule") otherwise.
    static ModuleRep validate(AlgebraPtr A, std::vector<FieldMatrix> action);

    const Algebra& algebra() const { return *A_; }
    const AlgebraPtr& algebra_ptr() const { return A_; }
    size_t dim() const { return dim_; }
    const FieldMatrix& action(size_t i) const { return action_[i]; }
    const std::vector<FieldMatrix>& actions() const { return action_; }
    const FiniteField& field() const { return A_->field(); }

    // v * a for an arbitrary algebra element a.
    std::vector<Fq> act(const std::vector<Fq>& v, const std::vector<Fq>& a) const;
    // The operator for a as a matrix in the row convention.
    FieldMatrix act_matrix(const std::vector<Fq>& a) const;

    bool same_algebra(const ModuleRep& o) const { return *A_ == *o.A_; }
    bool operator==(const ModuleRep& o) const {
        return same_algebra(o) && dim_ == o.dim_ && action_ == o.action_;
    }

private:
    ModuleRep(AlgebraPtr A, size_t dim, std::vector<FieldMatrix> action)
        : A_(std::move(A)), dim_(dim), action_(std::move(action)) {}

    AlgebraPtr A_;
    size_t dim_;
    std::vector<FieldMatrix> action_;
};

ModuleRep regular_module(const AlgebraPtr& A);

// Smallest invariant subspace containing the given rows, as echelonized
// basis rows.
FieldMatrix spin(const ModuleRep& M, const FieldMatrix& seed_rows);

struct SubmoduleRep {
    ModuleRep rep;
    FieldMatrix inclusion;  // rep.dim x M.dim, A-linear embedding
};

struct QuotientRep {
    ModuleRep rep;
    FieldMatrix projection;  // M.dim x rep.dim, A-linear surjection
};

// Module structure on an invariant subspace, in its canonical echelonized
// basis.  Throws MathError("NotInvariant") when the span is not stable.
SubmoduleRep submodule_rep(const ModuleRep& M, const FieldMatrix& rows);

// Module structure on M modulo an invariant subspace, carried by the
// non-pivot coordinates of the echelonized subspace.
QuotientRep quotient_rep(const ModuleRep& M, const FieldMatrix& rows);

ModuleRep direct_sum(const ModuleRep& M, const ModuleRep& N);
ModuleRep direct_sum_many(const AlgebraPtr& A, const std::vector<ModuleRep>& parts);

struct HomBasis {
    std::vector<FieldMatrix> basis;  // M.dim x N.dim intertwiners
    size_t dim() const { return basis.size(); }
};

// Basis of Hom_A(M, N) from the intertwining equations, solved against a
// generating set of the algebra.  Throws MathError("AlgebraMismatch") when
// the modules live over different algebras.
HomBasis hom_space(const ModuleRep& M, const ModuleRep& N);

// Rows spanning the kernel of an A-linear map given by matrix X (row
// convention, M.dim x N.dim).
FieldMatrix map_kernel_rows(const FieldMatrix& X);

// Pull a module over A back along an algebra map B -> A given by its row
// matrix (row i = image of b_i in A-coordinates).
ModuleRep restrict_along(const AlgebraPtr& B, const FieldMatrix& map_rows, const ModuleRep& M);

}  // namespace hopfk
