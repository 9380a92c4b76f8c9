#pragma once

#include <cstddef>
#include <vector>

#include "hopfk/algebra.hpp"
#include "hopfk/module_rep.hpp"

namespace hopfk {

/* Structure maps use the column convention: column j of a map matrix is the
 * image of basis element j.  Tensor coordinates are left-factor-major
 * throughout: u (x) v sits at index u * dim(second factor) + v, matching
 * FieldMatrix::kronecker.
 */
class HopfAlgebra {
public:
    // Checks, in order: coassociativity, the counit axioms, Delta and
    // epsilon being unital algebra maps, and the antipode axiom.  Throws
    // MathError with code NotCoassociative, CounitAxiomFails,
    // NotBialgebraMap, or AntipodeAxiomFails naming the first failure.
    static HopfAlgebra validate(AlgebraPtr alg, FieldMatrix comul, FieldMatrix counit,
                                FieldMatrix antipode);

    const Algebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    size_t dim() const { return alg_->dim(); }
    const FieldMatrix& comul() const { return comul_; }    // n^2 x n
    const FieldMatrix& counit() const { return counit_; }  // 1 x n
    const FieldMatrix& antipode() const { return antipode_; }
    const FiniteField& field() const { return alg_->field(); }
    Fq counit_of(const std::vector<Fq>& a) const;

private:
    HopfAlgebra(AlgebraPtr alg, FieldMatrix comul, FieldMatrix counit, FieldMatrix antipode)
        : alg_(std::move(alg)),
          comul_(std::move(comul)),
          counit_(std::move(counit)),
          antipode_(std::move(antipode)) {}

    AlgebraPtr alg_;
    FieldMatrix comul_;
    FieldMatrix counit_;
    FieldMatrix antipode_;
};

// Product of u and v inside A (x) B under the left-factor-major indexing.
std::vector<Fq> tensor_product_mul(const Algebra& A, const Algebra& B, const std::vector<Fq>& u,
                                   const std::vector<Fq>& v);

// sigma^{-1} as a matrix, verified two-sided; also checks the identities
// sigma^{-1}(h_2) h_1 = eps(h) 1 = h_2 sigma^{-1}(h_1) on every basis
// element.  Throws MathError("AntipodeSingular") on non-invertible input.
FieldMatrix antipode_inverse(const HopfAlgebra& H);

// One-dimensional module where basis element h acts by eps(h).
ModuleRep trivial_module(const HopfAlgebra& H);

class ComoduleAlgebra {
public:
    // Checks rho(1) = 1 (x) 1, multiplicativity of rho on basis pairs, the
    // coassociativity axiom against Delta, and the counit axiom.  Throws
    // MathError("NotComoduleAlgebraMap") or MathError("CoactionAxiomFails").
    static ComoduleAlgebra validate(AlgebraPtr alg, HopfAlgebra hopf, FieldMatrix coaction);

    const Algebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    const HopfAlgebra& hopf() const { return hopf_; }
    const FieldMatrix& coaction() const { return coaction_; }  // (dimA*dimH) x dimA
    const FiniteField& field() const { return alg_->field(); }

private:
    ComoduleAlgebra(AlgebraPtr alg, HopfAlgebra hopf, FieldMatrix coaction)
        : alg_(std::move(alg)), hopf_(std::move(hopf)), coaction_(std::move(coaction)) {}

    AlgebraPtr alg_;
    HopfAlgebra hopf_;
    FieldMatrix coaction_;
};

// H as a comodule algebra over itself, with rho = Delta.
ComoduleAlgebra self_comodule(const HopfAlgebra& H);

// The module M (x) V over A with (m (x) v) * a = m a_0 (x) v a_1, for M over
// CA's algebra and V over CA's Hopf algebra.
ModuleRep twist(const ComoduleAlgebra& CA, const ModuleRep& M, const ModuleRep& V);

struct GroupTableInfo {
    size_t identity;
    std::vector<size_t> inverse;
};

// Confirms the table is a group (associativity, two-sided identity,
// two-sided inverses); throws MathError("NotAGroup") otherwise.
GroupTableInfo check_group(const std::vector<std::vector<size_t>>& table);

// Group algebra FG with Delta g = g (x) g, eps(g) = 1, sigma(g) = g^{-1}.
HopfAlgebra group_algebra(const std::vector<std::vector<size_t>>& table, const FiniteField& F);

// Taft algebra of dimension n^2: g^n = 1, x^n = 0, xg = q gx, Delta g =
// g (x) g, Delta x = x (x) 1 + g (x) x, sigma(g) = g^{-1}, sigma(x) =
// -g^{-1} x.  n = 2 is the 4-dimensional small quantum group.  q must be a
// primitive n-th root of unity; throws MathError("NotPrimitiveRoot").
HopfAlgebra sweedler_taft(size_t n, const FiniteField& F, Fq q);

}  // namespace hopfk
