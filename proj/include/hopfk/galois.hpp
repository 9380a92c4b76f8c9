#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfk/hopf.hpp"
#include "hopfk/projective.hpp"

namespace hopfk {

// The coinvariant subalgebra B = {a : rho(a) = a (x) 1} as a first-class
// algebra, with its embedding rows into A.
struct CoinvAlgebra {
    AlgebraPtr alg;
    FieldMatrix rows;  // dim B x dim A
};

CoinvAlgebra coinvariants(const ComoduleAlgebra& CA);

// N (x)_B A for a right B-module N: the quotient of N (x) A by the rows
// x b (x) y - x (x) b y, carrying the right A-action on the second factor.
// section is a right inverse of projection (section * projection = I).
struct RelTensorRep {
    ModuleRep rep;
    FieldMatrix projection;  // (dim N * dim A) x rep.dim
    FieldMatrix section;     // rep.dim x (dim N * dim A)
};

RelTensorRep relative_tensor(const AlgebraPtr& A, const CoinvAlgebra& B, const ModuleRep& N);

// M viewed as a B-module through the embedding.
ModuleRep restrict_to_coinv(const CoinvAlgebra& B, const ModuleRep& M);

struct GaloisExtension {
    ComoduleAlgebra ca;
    CoinvAlgebra coinv;
    RelTensorRep rel;       // A (x)_B A
    FieldMatrix beta;       // rel.rep.dim x (dim A * dim H), x (x) y -> x y_0 (x) y_1
    bool galois;
    std::string diagnostic;  // empty when galois
};

/* Builds B, A (x)_B A and beta, verifies beta kills the defining relations
 * and is an A-A-bimodule map, and decides bijectivity.  When the verdict is
 * positive the Kreimer-Takeuchi consequence (A projective over B) is
 * certified as an independent cross-check.  Non-Galois input yields
 * galois = false with a diagnostic, not an exception.
 */
GaloisExtension galois_check(const ComoduleAlgebra& CA, Prng& rng);

ModuleRep induce(const GaloisExtension& ext, const ModuleRep& N);
ModuleRep restrict_module(const GaloisExtension& ext, const ModuleRep& M);

// An explicit isomorphism lhs -> rhs in the row convention, verified
// intertwining and invertible.
struct IsoCert {
    ModuleRep lhs;
    ModuleRep rhs;
    FieldMatrix iso;
};

// Ind Res M  ->  M (x) H  by  m (x) y -> m y_0 (x) y_1.  Throws
// MathError("VerificationFailed") naming the first failed identity.
IsoCert verify_ind_res(const GaloisExtension& ext, const ModuleRep& M);

// Ind(N (x) V)  ->  Ind(N) (x) V  by  phi(n (x) v (x) a) = n (x) a_0 (x) v a_1,
// inverse  psi(n (x) a (x) v) = n (x) v sigma^{-1}(a_1) (x) a_0.  Both maps
// are checked well defined on the relations and exact mutual inverses.
IsoCert verify_ind_twist(const GaloisExtension& ext, const ModuleRep& N, const ModuleRep& V);

// Membership in the category of modules with projective restriction.
bool in_category_C(const GaloisExtension& ext, const AlgebraCtx& bctx, const ModuleRep& M);

struct CrossedProductSpec {
    AlgebraPtr base;                                  // B
    std::vector<std::vector<size_t>> group;           // multiplication table
    std::vector<FieldMatrix> action;                  // per g, column convention
    std::vector<std::vector<std::vector<Fq>>> cocycle;  // tau[g][h] in B
};

/* Crossed product B * G on basis b_i (x) gbar with
 * (b gbar)(c hbar) = b g(c) tau(g,h) (gh)bar and coaction rho(b gbar) =
 * b gbar (x) g.  Validates the group, the automorphisms, normalization
 * tau(1,g) = tau(g,1) = 1, invertibility of the cocycle values, the cocycle
 * condition and the twisted-module condition before building the algebra.
 */
ComoduleAlgebra crossed_product(const CrossedProductSpec& spec);

}  // namespace hopfk
