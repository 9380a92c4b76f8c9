#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfk/algcore.hpp"
#include "hopfk/chop.hpp"
#include "hopfk/module_rep.hpp"
#include "hopfk/prng.hpp"

namespace hopfk {

// Everything the homological routines need about a fixed algebra, computed
// once: the simples/PIMs and the radical of A.
struct AlgebraCtx {
    AlgebraPtr alg;
    AlgebraData data;
    RadicalInfo rad;
};

AlgebraCtx make_ctx(AlgebraPtr alg, Prng& rng);

struct ProjectiveCover {
    ModuleRep cover;                     // direct sum of PIMs, one block per chosen copy
    FieldMatrix surjection;              // cover.dim x M.dim, A-linear and onto
    std::vector<size_t> multiplicities;  // copies of P_i, index-aligned with ctx simples
};

// Minimal projective cover P -> M.  The multiplicity of P_i equals
// dim Hom(M, S_i) / dim End(S_i); both sides are computed independently and
// compared.  The surjection is verified A-linear of full rank.
ProjectiveCover projective_cover(const ModuleRep& M, const AlgebraCtx& ctx);

// A module is projective exactly when its cover has the same dimension.
bool is_projective(const ModuleRep& M, const AlgebraCtx& ctx);

// Kernel of the cover surjection, as a module in its own coordinates.
ModuleRep syzygy(const ModuleRep& M, const AlgebraCtx& ctx);

// Least k with the k-th syzygy projective, or nullopt if the bound is hit
// first.  The zero module counts as projective.
std::optional<size_t> proj_dim(const ModuleRep& M, const AlgebraCtx& ctx, size_t bound);

// Max of proj_dim over the simples; nullopt if any of them is undetected.
std::optional<size_t> gldim(const AlgebraCtx& ctx, size_t bound);

// Default iteration bound for proj_dim and gldim.
inline size_t default_pd_bound(const Algebra& A) { return 2 * A.dim(); }

}  // namespace hopfk
