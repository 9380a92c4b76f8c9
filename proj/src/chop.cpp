#include "hopfk/chop.hpp"

#include <algorithm>

#include "hopfk/algcore.hpp"
#include "hopfk/errors.hpp"

namespace hopfk {

namespace {

constexpr size_t kNortonTries = 128;
constexpr std::uint64_t kVectorEnumLimit = 1u << 16;
constexpr size_t kIsoTries = 64;
constexpr std::uint64_t kIsoEnumLimit = 1u << 16;

// q^n with saturation, for enumeration guards.
std::uint64_t pow_saturating(std::uint64_t q, size_t n, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (size_t i = 0; i < n; ++i) {
        if (r > cap / q) return cap + 1;
        r *= q;
    }
    return r;
}

std::vector<Fq> random_vector(const FiniteField& F, size_t n, Prng& rng) {
    std::vector<Fq> v(n);
    for (auto& x : v) x = static_cast<Fq>(rng.below(F.q()));
    return v;
}

// Closure of seed rows under an arbitrary matrix list; no module axioms
// assumed (used for transpose-side spins).
FieldMatrix spin_under(const FiniteField& F, const std::vector<FieldMatrix>& mats,
                       const std::vector<Fq>& seed) {
    EchelonBasis span(F, seed.size());
    std::vector<std::vector<Fq>> frontier;
    if (span.insert(seed)) frontier.push_back(seed);
    while (!frontier.empty()) {
        std::vector<std::vector<Fq>> next;
        for (const auto& v : frontier)
            for (const auto& R : mats) {
                std::vector<Fq> w = R.apply_row(v);
                if (span.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return span.as_matrix();
}

// Index k in [1, q^d) decoded as a vector of base-q digits; the packed
// field encoding makes every digit a valid element.
std::vector<Fq> decode_vector(const FiniteField& F, size_t d, std::uint64_t k) {
    std::vector<Fq> v(d, 0);
    for (size_t i = 0; i < d; ++i) {
        v[i] = static_cast<Fq>(k % F.q());
        k /= F.q();
    }
    return v;
}

// Proper invariant subspace must really be one; cheap and keeps verdicts
// trustworthy.
void check_witness(const ModuleRep& M, const FieldMatrix& rows) {
    EchelonBasis span(M.field(), M.dim());
    for (size_t r = 0; r < rows.rows(); ++r) span.insert(rows.row(r));
    internal_check(span.dim() >= 1 && span.dim() < M.dim(), "witness subspace not proper");
    FieldMatrix basis = span.as_matrix();
    for (size_t r = 0; r < basis.rows(); ++r)
        for (size_t i = 0; i < M.algebra().dim(); ++i)
            internal_check(span.contains(M.action(i).apply_row(basis.row(r))),
                           "witness subspace not invariant");
}

}  // namespace

std::string to_string(TriVerdict v) {
    switch (v) {
        case TriVerdict::Yes: return "yes";
        case TriVerdict::No: return "no";
        default: return "undecided";
    }
}

IrredResult is_irreducible(const ModuleRep& M, Prng& rng) {
    const FiniteField& F = M.field();
    size_t d = M.dim();
    internal_check(d >= 1, "irreducibility of the zero module");
    if (d == 1)
        return IrredResult{TriVerdict::Yes, std::nullopt,
                           IrredCertificate{"dim1", {}, {}}};

    std::vector<FieldMatrix> transposed;
    for (const auto& R : M.actions()) transposed.push_back(R.transpose());

    Prng local = rng.derive("norton");
    for (size_t attempt = 0; attempt < kNortonTries; ++attempt) {
        std::vector<Fq> a = random_vector(F, M.algebra().dim(), local);
        FieldMatrix theta = M.act_matrix(a);
        poly::Poly cp = poly::charpoly(theta);
        for (const auto& [p, mult] : poly::factor(F, cp)) {
            (void)mult;
            FieldMatrix pth = poly::eval_at_matrix(p, theta);
            FieldMatrix ker = pth.transpose().kernel_basis();  // rows v with v*p(theta) = 0
            if (ker.rows() == 0) continue;

            FieldMatrix spun = spin(M, FieldMatrix::from_rows(F, d, {ker.row(0)}));
            if (spun.rows() < d) {
                check_witness(M, spun);
                return IrredResult{TriVerdict::No, spun, std::nullopt};
            }
            if (ker.rows() != static_cast<size_t>(poly::deg(p))) continue;

            // Nullity equals the factor degree: one full spin on each side
            // certifies irreducibility.
            FieldMatrix kert = pth.kernel_basis();  // rows w with p(theta^T) kills w
            internal_check(kert.rows() == ker.rows(), "transpose nullity mismatch");
            FieldMatrix spunt = spin_under(F, transposed, kert.row(0));
            if (spunt.rows() < d) {
                FieldMatrix perp = spunt.kernel_basis();
                check_witness(M, perp);
                return IrredResult{TriVerdict::No, perp, std::nullopt};
            }
            return IrredResult{TriVerdict::Yes, std::nullopt,
                               IrredCertificate{"norton", a, p}};
        }
    }

    // Deterministic fallback: a module is reducible exactly when some
    // nonzero vector spins to a proper subspace.
    if (pow_saturating(F.q(), d, kVectorEnumLimit) <= kVectorEnumLimit) {
        std::uint64_t total = pow_saturating(F.q(), d, kVectorEnumLimit);
        for (std::uint64_t k = 1; k < total; ++k) {
            std::vector<Fq> v = decode_vector(F, d, k);
            FieldMatrix spun = spin(M, FieldMatrix::from_rows(F, d, {v}));
            if (spun.rows() < d) {
                check_witness(M, spun);
                return IrredResult{TriVerdict::No, spun, std::nullopt};
            }
        }
        return IrredResult{TriVerdict::Yes, std::nullopt,
                           IrredCertificate{"exhaustive", {}, {}}};
    }
    return IrredResult{TriVerdict::Undecided, std::nullopt, std::nullopt};
}

std::vector<ModuleRep> composition_factors(const ModuleRep& M, Prng& rng) {
    if (M.dim() == 0) return {};
    IrredResult r = is_irreducible(M, rng);
    if (r.verdict == TriVerdict::Yes) return {M};
    if (r.verdict == TriVerdict::Undecided)
        throw MathError("Undecided", "irreducibility undecided while chopping");
    SubmoduleRep sub = submodule_rep(M, *r.witness);
    QuotientRep quo = quotient_rep(M, *r.witness);
    std::vector<ModuleRep> out = composition_factors(sub.rep, rng);
    std::vector<ModuleRep> rest = composition_factors(quo.rep, rng);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

TriVerdict iso_test(const ModuleRep& M, const ModuleRep& N, Prng& rng) {
    if (!M.same_algebra(N)) throw MathError("AlgebraMismatch", "iso test across algebras");
    if (M.dim() != N.dim()) return TriVerdict::No;
    size_t d = M.dim();
    if (d == 0) return TriVerdict::Yes;
    if (M == N) return TriVerdict::Yes;

    HomBasis H = hom_space(M, N);
    size_t h = H.dim();
    if (h == 0) return TriVerdict::No;
    const FiniteField& F = M.field();

    auto try_combo = [&](const std::vector<Fq>& c) {
        FieldMatrix X(F, d, d);
        for (size_t i = 0; i < h; ++i)
            if (c[i] != 0) X = X.add(H.basis[i].scaled(c[i]));
        return X.rank() == d;
    };

    Prng local = rng.derive("iso");
    for (size_t t = 0; t < kIsoTries; ++t)
        if (try_combo(random_vector(F, h, local))) return TriVerdict::Yes;

    if (pow_saturating(F.q(), h, kIsoEnumLimit) <= kIsoEnumLimit) {
        std::uint64_t total = pow_saturating(F.q(), h, kIsoEnumLimit);
        for (std::uint64_t k = 1; k < total; ++k)
            if (try_combo(decode_vector(F, h, k))) return TriVerdict::Yes;
        return TriVerdict::No;
    }
    return TriVerdict::Undecided;
}

namespace {

// Seed-independent sort key: dimension, then the characteristic polynomial
// coefficients of every basis action.  Conjugation-invariant, so any
// representative of the iso class produces the same key.
std::vector<std::uint64_t> simple_key(const ModuleRep& S) {
    std::vector<std::uint64_t> key{S.dim()};
    for (const auto& R : S.actions())
        for (Fq c : poly::charpoly(R)) key.push_back(c);
    return key;
}

}  // namespace

AlgebraData analyze(const AlgebraPtr& A, Prng& rng) {
    ModuleRep reg = regular_module(A);
    std::vector<ModuleRep> leaves = composition_factors(reg, rng);

    SimpleList simples;
    for (const auto& L : leaves) {
        bool known = false;
        for (const auto& S : simples.simples) {
            TriVerdict v = iso_test(L, S, rng);
            if (v == TriVerdict::Undecided)
                throw MathError("Undecided", "iso test undecided while deduplicating simples");
            if (v == TriVerdict::Yes) { known = true; break; }
        }
        if (!known) simples.simples.push_back(L);
    }
    std::stable_sort(simples.simples.begin(), simples.simples.end(),
                     [](const ModuleRep& a, const ModuleRep& b) {
                         return simple_key(a) < simple_key(b);
                     });
    for (size_t i = 0; i + 1 < simples.simples.size(); ++i)
        internal_check(simple_key(simples.simples[i]) != simple_key(simples.simples[i + 1]),
                       "non-isomorphic simples share a sort key");
    for (const auto& S : simples.simples) simples.endo_dims.push_back(hom_space(S, S).dim());

    RadicalInfo rad = radical(A, rng);
    QuotientAlgebra Q = quotient_algebra(*A, rad.rows);
    auto centrals = central_primitive_idempotents(Q.quotient, rng);

    // Match each central idempotent to the simple its block acts on.
    std::vector<std::vector<Fq>> central_for_simple(simples.simples.size());
    std::vector<bool> claimed(centrals.size(), false);
    for (size_t j = 0; j < simples.simples.size(); ++j) {
        const ModuleRep& S = simples.simples[j];
        bool found = false;
        for (size_t t = 0; t < centrals.size() && !found; ++t) {
            std::vector<Fq> lifted = Q.section.apply_row(centrals[t]);
            if (S.act_matrix(lifted).is_identity()) {
                internal_check(!claimed[t], "central idempotent claimed twice");
                claimed[t] = true;
                central_for_simple[j] = centrals[t];
                found = true;
            }
        }
        internal_check(found, "simple matches no central idempotent");
    }
    internal_check(std::all_of(claimed.begin(), claimed.end(), [](bool b) { return b; }),
                   "unmatched central idempotent");

    PimList pims;
    for (size_t j = 0; j < simples.simples.size(); ++j) {
        std::vector<Fq> e_block =
            block_primitive_idempotent(Q.quotient, central_for_simple[j], rng);
        std::vector<Fq> e = lift_idempotent(*A, Q, e_block, rad.nilindex);
        SubmoduleRep P = submodule_rep(reg, A->lmul(e));  // rows of lmul(e) span e*A
        ModuleRep topP = top_module(P.rep, rad.rows);
        internal_check(iso_test(topP, simples.simples[j], rng) == TriVerdict::Yes,
                       "pim top does not match its simple");
        pims.pims.push_back(P.rep);
        pims.idempotents.push_back(e);
        pims.inclusions.push_back(P.inclusion);
    }

    // dim A = sum over blocks of dim P_i * (dim S_i / dim End(S_i)).
    size_t total = 0;
    for (size_t j = 0; j < simples.simples.size(); ++j) {
        internal_check(simples.simples[j].dim() % simples.endo_dims[j] == 0,
                       "endomorphism field does not divide the simple dimension");
        total += pims.pims[j].dim() * (simples.simples[j].dim() / simples.endo_dims[j]);
    }
    internal_check(total == A->dim(), "pim dimension count does not add up");

    return AlgebraData{std::move(simples), std::move(pims)};
}

std::vector<size_t> jh_multiset(const ModuleRep& M, const SimpleList& simples, Prng& rng) {
    std::vector<size_t> counts(simples.simples.size(), 0);
    for (const auto& L : composition_factors(M, rng)) {
        bool matched = false;
        for (size_t j = 0; j < simples.simples.size() && !matched; ++j) {
            TriVerdict v = iso_test(L, simples.simples[j], rng);
            if (v == TriVerdict::Undecided)
                throw MathError("Undecided", "iso test undecided while matching factors");
            if (v == TriVerdict::Yes) { ++counts[j]; matched = true; }
        }
        if (!matched)
            throw MathError("UnknownFactor", "composition factor matches no listed simple");
    }
    return counts;
}

}  // namespace hopfk
