#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hopfk/field_matrix.hpp"
#include "hopfk/finite_field.hpp"

namespace hopfk::poly {

using la::EchelonBasis;
using la::FieldMatrix;
using la::FiniteField;
using la::Fq;

// Coefficients low degree first, no trailing zeros; the zero polynomial is
// the empty vector.
using Poly = std::vector<Fq>;

void trim(Poly& f);
int deg(const Poly& f);  // -1 for the zero polynomial
bool is_zero(const Poly& f);
Poly constant(Fq c);
Poly monomial(size_t k, Fq c);

Poly add(const FiniteField& F, const Poly& f, const Poly& g);
Poly sub(const FiniteField& F, const Poly& f, const Poly& g);
Poly scale(const FiniteField& F, const Poly& f, Fq c);
Poly mul(const FiniteField& F, const Poly& f, const Poly& g);
// Quotient and remainder; g must be nonzero.
std::pair<Poly, Poly> divmod(const FiniteField& F, const Poly& f, const Poly& g);
Poly rem(const FiniteField& F, const Poly& f, const Poly& g);
Poly make_monic(const FiniteField& F, const Poly& f);
Poly gcd_monic(const FiniteField& F, Poly f, Poly g);
// (g, u, v) with u*f + v*h = g, g the monic gcd.
struct ExtGcd {
    Poly g, u, v;
};
ExtGcd ext_gcd(const FiniteField& F, const Poly& f, const Poly& h);
Poly deriv(const FiniteField& F, const Poly& f);
Fq eval(const FiniteField& F, const Poly& f, Fq x);
Poly pow_mod(const FiniteField& F, Poly base, std::uint64_t e, const Poly& mod);

std::string to_string(const FiniteField& F, const Poly& f);

// Complete factorization into monic irreducibles with multiplicities,
// sorted by degree then lexicographically.  Input must be nonconstant.
// Squarefree reduction handles p-th powers, then Berlekamp splits each
// squarefree part deterministically by scanning field constants.
std::vector<std::pair<Poly, int>> factor(const FiniteField& F, const Poly& f);

bool is_irreducible(const FiniteField& F, const Poly& f);

// Characteristic polynomial det(xI - M), monic, via Hessenberg reduction.
Poly charpoly(const FieldMatrix& M);

// Minimal polynomial of M, monic, from the first linear dependence among
// the flattened powers of M.
Poly minpoly(const FieldMatrix& M);

// Horner evaluation of f at a square matrix.
FieldMatrix eval_at_matrix(const Poly& f, const FieldMatrix& M);

}  // namespace hopfk::poly
