#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfk/fqpoly.hpp"
#include "hopfk/module_rep.hpp"
#include "hopfk/prng.hpp"

namespace hopfk {

enum class TriVerdict { Yes, No, Undecided };

std::string to_string(TriVerdict v);

struct IrredCertificate {
    // How irreducibility was certified: "dim1", "norton" (element whose
    // characteristic polynomial has a factor of nullity equal to its degree,
    // with both spin conditions verified), or "exhaustive" (every nonzero
    // vector spins to the whole space).
    std::string kind;
    std::vector<Fq> element;
    poly::Poly factor;
};

struct IrredResult {
    TriVerdict verdict;
    std::optional<FieldMatrix> witness;            // proper invariant rows when No
    std::optional<IrredCertificate> certificate;   // when Yes
};

// Norton-criterion irreducibility test with seeded random elements and a
// deterministic exhaustive fallback (all nonzero vectors) when q^dim is
// small.  Never returns a wrong verdict; Undecided only when both paths
// are unavailable.
IrredResult is_irreducible(const ModuleRep& M, Prng& rng);

// Jordan-Hoelder factors in discovery order (dim 0 gives an empty list).
std::vector<ModuleRep> composition_factors(const ModuleRep& M, Prng& rng);

// Isomorphism test through invertible elements of Hom(M,N): seeded random
// coefficient combinations, then exhaustive enumeration when q^dim(Hom) is
// small.
TriVerdict iso_test(const ModuleRep& M, const ModuleRep& N, Prng& rng);

struct SimpleList {
    std::vector<ModuleRep> simples;   // pairwise non-isomorphic, canonical order
    std::vector<size_t> endo_dims;    // dim_F End(S_i)
};

struct PimList {
    std::vector<ModuleRep> pims;                  // index-aligned with simples
    std::vector<std::vector<Fq>> idempotents;     // e_i in A with P_i = e_i A
    std::vector<FieldMatrix> inclusions;          // P_i basis rows inside A
};

struct AlgebraData {
    SimpleList simples;
    PimList pims;
};

// Simples from chopping the regular module (deduplicated, sorted by the
// seed-independent key dim + action charpolys), then one primitive
// idempotent per block lifted from the semisimple quotient.
AlgebraData analyze(const AlgebraPtr& A, Prng& rng);

// Multiplicity of each SimpleList entry in the Jordan-Hoelder multiset of
// M.  Throws MathError("UnknownFactor") if a factor matches no entry.
std::vector<size_t> jh_multiset(const ModuleRep& M, const SimpleList& simples, Prng& rng);

}  // namespace hopfk
