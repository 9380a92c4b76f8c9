#pragma once

#include <vector>

#include "hopfk/algebra.hpp"
#include "hopfk/module_rep.hpp"
#include "hopfk/prng.hpp"

namespace hopfk {

struct RadicalInfo {
    FieldMatrix rows;     // echelonized basis of J(A)
    size_t nilindex;      // least k with J^k = 0 (1 when J = 0)
};

// Jacobson radical as the common annihilator of the composition factors of
// the regular module.  Verified nilpotent, verified a two-sided ideal, and
// the quotient is verified to have radical zero.
RadicalInfo radical(const AlgebraPtr& A, Prng& rng);

// M / M*J(A).
ModuleRep top_module(const ModuleRep& M, const FieldMatrix& radical_rows);

// Basis rows of the center.
FieldMatrix center(const Algebra& A);

// Central primitive idempotents of a semisimple algebra, found by factoring
// the minimal polynomial of a separating central element (recursive
// splitting as fallback when no single element separates).  Their sum is 1
// and they are orthogonal; both facts are asserted.
std::vector<std::vector<Fq>> central_primitive_idempotents(const Algebra& S, Prng& rng);

// One primitive idempotent generating a minimal right ideal of a simple
// summand: e with eB minimal, found from an embedding of the block's
// simple module into the regular module.
std::vector<Fq> block_primitive_idempotent(const Algebra& S, const std::vector<Fq>& block_unit,
                                           Prng& rng);

// Lift an idempotent of A/J along the nilpotent ideal J by the
// e <- 3e^2 - 2e^3 iteration; exactness asserted.
std::vector<Fq> lift_idempotent(const Algebra& A, const QuotientAlgebra& q,
                                const std::vector<Fq>& ebar, size_t nilindex);

}  // namespace hopfk
