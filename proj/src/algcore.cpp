#include "hopfk/algcore.hpp"

#include "hopfk/chop.hpp"
#include "hopfk/errors.hpp"
#include "hopfk/fqpoly.hpp"

namespace hopfk {

RadicalInfo radical(const AlgebraPtr& A, Prng& rng) {
    const FiniteField& F = A->field();
    size_t n = A->dim();
    std::vector<ModuleRep> leaves = composition_factors(regular_module(A), rng);

    // a annihilates every composition factor iff sum_i a_i R_i^(t) = 0 for
    // each leaf t; one wide row-kernel computation.
    size_t width = 0;
    for (const auto& L : leaves) width += L.dim() * L.dim();
    FieldMatrix sys(F, n, width);
    for (size_t i = 0; i < n; ++i) {
        size_t off = 0;
        for (const auto& L : leaves) {
            const FieldMatrix& R = L.action(i);
            for (size_t r = 0; r < L.dim(); ++r)
                for (size_t c = 0; c < L.dim(); ++c) sys.at(i, off + r * L.dim() + c) = R.at(r, c);
            off += L.dim() * L.dim();
        }
    }
    FieldMatrix rows = sys.transpose().kernel_basis();

    // Two-sided ideal check.
    EchelonBasis span(F, n);
    for (size_t r = 0; r < rows.rows(); ++r) span.insert(rows.row(r));
    for (size_t r = 0; r < rows.rows(); ++r)
        for (size_t i = 0; i < n; ++i) {
            std::vector<Fq> e(n, 0);
            e[i] = F.one();
            internal_check(span.contains(A->mul(rows.row(r), e)) &&
                               span.contains(A->mul(e, rows.row(r))),
                           "radical is not a two-sided ideal");
        }

    // Nilpotency: powers of the ideal must shrink to zero.  On exit,
    // nilindex is the least k with J^k = 0 (1 when J = 0).
    size_t nilindex = 1;
    if (rows.rows() > 0) {
        FieldMatrix power = rows;
        while (power.rows() > 0) {
            ++nilindex;
            EchelonBasis next(F, n);
            for (size_t r = 0; r < power.rows(); ++r)
                for (size_t s = 0; s < rows.rows(); ++s)
                    next.insert(A->mul(power.row(r), rows.row(s)));
            internal_check(next.dim() < power.rows(), "radical power stopped shrinking");
            power = next.as_matrix();
        }
    }

    // Idempotence of semisimplification: the quotient must have radical 0.
    if (rows.rows() > 0) {
        QuotientAlgebra Q = quotient_algebra(*A, rows);
        auto Qptr = std::make_shared<const Algebra>(Q.quotient);
        RadicalInfo qrad = radical(Qptr, rng);
        internal_check(qrad.rows.rows() == 0, "semisimple quotient has nonzero radical");
    }
    return RadicalInfo{rows, nilindex};
}

ModuleRep top_module(const ModuleRep& M, const FieldMatrix& radical_rows) {
    const FiniteField& F = M.field();
    std::vector<std::vector<Fq>> mj;
    for (size_t j = 0; j < radical_rows.rows(); ++j) {
        FieldMatrix R = M.act_matrix(radical_rows.row(j));
        for (size_t r = 0; r < M.dim(); ++r) mj.push_back(R.row(r));
    }
    if (mj.empty()) return M;
    return quotient_rep(M, FieldMatrix::from_rows(F, M.dim(), mj)).rep;
}

FieldMatrix center(const Algebra& A) {
    const FiniteField& F = A.field();
    size_t n = A.dim();
    // z central iff z*(rmul_i - lmul_i) = 0 for every basis element.
    FieldMatrix sys(F, n, n * n);
    for (size_t i = 0; i < n; ++i) {
        FieldMatrix D = A.rmul_basis(i).sub(A.lmul_basis(i));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) sys.at(r, i * n + c) = D.at(r, c);
    }
    return sys.transpose().kernel_basis();
}

namespace {

// Horner evaluation of a polynomial at an algebra element.
std::vector<Fq> eval_in_algebra(const Algebra& A, const poly::Poly& f, const std::vector<Fq>& z) {
    const FiniteField& F = A.field();
    std::vector<Fq> acc(A.dim(), 0);
    for (size_t i = f.size(); i-- > 0;) {
        acc = A.mul(acc, z);
        if (f[i] != 0)
            for (size_t k = 0; k < A.dim(); ++k)
                acc[k] = F.add(acc[k], F.mul(f[i], A.unit()[k]));
    }
    return acc;
}

std::vector<Fq> random_element(const FiniteField& F, size_t n, Prng& rng) {
    std::vector<Fq> v(n);
    for (auto& x : v) x = static_cast<Fq>(rng.below(F.q()));
    return v;
}

// Minimal polynomial of z as an operator on the commutative algebra Z.
poly::Poly minpoly_of_element(const Algebra& Z, const std::vector<Fq>& z) {
    return poly::minpoly(Z.rmul(z));
}

// Idempotent family from the distinct irreducible factors of the squarefree
// minimal polynomial of z, by CRT inside F[z].
std::vector<std::vector<Fq>> crt_idempotents(const Algebra& Z, const std::vector<Fq>& z,
                                             const poly::Poly& mp,
                                             const std::vector<poly::Poly>& irred_factors) {
    const FiniteField& F = Z.field();
    std::vector<std::vector<Fq>> eps;
    for (const auto& fi : irred_factors) {
        poly::Poly gi = poly::divmod(F, mp, fi).first;
        // hi = gi^{-1} mod fi from the Bezout identity.
        poly::ExtGcd eg = poly::ext_gcd(F, gi, fi);
        internal_check(poly::deg(eg.g) == 0, "cofactor not invertible modulo its factor");
        poly::Poly hi = poly::rem(F, poly::scale(F, eg.u, F.inv(eg.g[0])), fi);
        poly::Poly ei_poly = poly::rem(F, poly::mul(F, gi, hi), mp);
        eps.push_back(eval_in_algebra(Z, ei_poly, z));
    }
    const std::vector<Fq>& one = Z.unit();
    std::vector<Fq> sum(Z.dim(), 0);
    for (const auto& e : eps) {
        internal_check(Z.mul(e, e) == e, "crt idempotent not idempotent");
        internal_check(!vec_is_zero(e), "crt idempotent vanished");
        for (size_t k = 0; k < Z.dim(); ++k) sum[k] = F.add(sum[k], e[k]);
    }
    internal_check(sum == one, "crt idempotents do not sum to 1");
    for (size_t i = 0; i < eps.size(); ++i)
        for (size_t j = i + 1; j < eps.size(); ++j)
            internal_check(vec_is_zero(Z.mul(eps[i], eps[j])), "crt idempotents not orthogonal");
    return eps;
}

// Primitive idempotent decomposition of a commutative semisimple algebra:
// find an element whose squarefree minimal polynomial either certifies a
// field (irreducible of full degree, so Z itself is primitive) or splits Z,
// then recurse into the corners.
std::vector<std::vector<Fq>> split_commutative(const Algebra& Z, Prng& rng) {
    const FiniteField& F = Z.field();
    size_t z = Z.dim();
    if (z == 1) return {Z.unit()};

    // IsField: Z = F[cand] is a field, hence primitive.  Splits: the minimal
    // polynomial has >= 2 distinct irreducible factors.  Neither: cand
    // generates a proper subfield; try another element.
    enum class Probe { IsField, Splits, Neither };
    poly::Poly mp;
    std::vector<poly::Poly> irr;
    auto probe = [&](const std::vector<Fq>& cand) {
        mp = minpoly_of_element(Z, cand);
        irr.clear();
        for (const auto& [p, m] : poly::factor(F, mp)) {
            internal_check(m == 1, "semisimple center gave a non-squarefree minimal polynomial");
            irr.push_back(p);
        }
        if (irr.size() >= 2) return Probe::Splits;
        if (poly::deg(mp) == static_cast<int>(z)) return Probe::IsField;
        return Probe::Neither;
    };

    std::optional<std::vector<Fq>> witness;
    auto consider = [&](const std::vector<Fq>& cand) {
        switch (probe(cand)) {
            case Probe::IsField: return true;
            case Probe::Splits: witness = cand; return false;
            default: return false;
        }
    };

    // Basis elements first (deterministic), then seeded random, then full
    // enumeration when feasible.
    for (size_t i = 0; i < z && !witness; ++i) {
        std::vector<Fq> e(z, 0);
        e[i] = F.one();
        if (consider(e)) return {Z.unit()};
    }
    Prng local = rng.derive("wedderburn");
    for (size_t t = 0; t < 64 && !witness; ++t)
        if (consider(random_element(F, z, local))) return {Z.unit()};
    if (!witness) {
        std::uint64_t total = 1, cap = 1u << 16;
        bool small = true;
        for (size_t i = 0; i < z && small; ++i) {
            if (total > cap / F.q()) small = false;
            else total *= F.q();
        }
        if (!small)
            throw MathError("WedderburnSplitFailure",
                            "no splitting element found and the center is too large to enumerate");
        for (std::uint64_t k = 1; k < total && !witness; ++k) {
            std::vector<Fq> cand(z, 0);
            std::uint64_t t = k;
            for (size_t i = 0; i < z; ++i) { cand[i] = static_cast<Fq>(t % F.q()); t /= F.q(); }
            if (consider(cand)) return {Z.unit()};
        }
        if (!witness)
            throw MathError("WedderburnSplitFailure",
                            "exhausted the center without a splitting or generating element");
    }

    // probe() left mp and irr describing the witness.
    probe(*witness);
    auto eps = crt_idempotents(Z, *witness, mp, irr);
    std::vector<std::vector<Fq>> out;
    for (const auto& e : eps) {
        std::vector<std::vector<Fq>> corner_rows;
        for (size_t i = 0; i < z; ++i) {
            std::vector<Fq> b(z, 0);
            b[i] = F.one();
            corner_rows.push_back(Z.mul(e, b));
        }
        Subalgebra corner = subalgebra_on_span(Z, FieldMatrix::from_rows(F, z, corner_rows));
        for (const auto& sub_e : split_commutative(corner.sub, rng))
            out.push_back(corner.basis_rows.apply_row(sub_e));
    }
    return out;
}

}  // namespace

std::vector<std::vector<Fq>> central_primitive_idempotents(const Algebra& S, Prng& rng) {
    const FiniteField& F = S.field();
    FieldMatrix Zrows = center(S);
    Subalgebra Z = subalgebra_on_span(S, Zrows);
    std::vector<std::vector<Fq>> eps_z = split_commutative(Z.sub, rng);

    std::vector<std::vector<Fq>> eps;
    for (const auto& ez : eps_z) eps.push_back(Z.basis_rows.apply_row(ez));

    std::vector<Fq> sum(S.dim(), 0);
    for (const auto& e : eps) {
        internal_check(S.mul(e, e) == e && !vec_is_zero(e), "central idempotent check failed");
        for (size_t k = 0; k < S.dim(); ++k) sum[k] = F.add(sum[k], e[k]);
    }
    internal_check(sum == S.unit(), "central idempotents do not sum to 1");
    for (size_t i = 0; i < eps.size(); ++i)
        for (size_t j = i + 1; j < eps.size(); ++j)
            internal_check(vec_is_zero(S.mul(eps[i], eps[j])),
                           "central idempotents not orthogonal");
    return eps;
}

std::vector<Fq> block_primitive_idempotent(const Algebra& S, const std::vector<Fq>& block_unit,
                                           Prng& rng) {
    const FiniteField& F = S.field();
    size_t n = S.dim();

    std::vector<std::vector<Fq>> corner_rows;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Fq> b(n, 0);
        b[i] = F.one();
        corner_rows.push_back(S.mul(S.mul(block_unit, b), block_unit));
    }
    Subalgebra B = subalgebra_on_span(S, FieldMatrix::from_rows(F, n, corner_rows));
    auto Bptr = std::make_shared<const Algebra>(B.sub);

    ModuleRep regB = regular_module(Bptr);
    std::vector<ModuleRep> leaves = composition_factors(regB, rng);
    internal_check(!leaves.empty(), "simple block without composition factors");
    const ModuleRep& SB = leaves[0];

    std::vector<Fq> e_corner;
    if (SB.dim() == B.sub.dim()) {
        // The block is a division algebra; its unit is primitive.
        e_corner = B.sub.unit();
    } else {
        HomBasis emb = hom_space(SB, regB);
        internal_check(emb.dim() >= 1, "no embedding of the block simple into the regular module");
        const FieldMatrix& X = emb.basis[0];
        // Rows of X span a minimal right ideal I; solve for t in I acting as
        // a left identity on I, which is the primitive idempotent with tB = I.
        size_t k = X.rows();
        FieldMatrix sys(F, k * B.sub.dim(), k);
        std::vector<Fq> rhs(k * B.sub.dim(), 0);
        for (size_t s = 0; s < k; ++s) {
            for (size_t r = 0; r < k; ++r) {
                std::vector<Fq> prod = B.sub.mul(X.row(r), X.row(s));
                for (size_t c = 0; c < B.sub.dim(); ++c) sys.at(s * B.sub.dim() + c, r) = prod[c];
            }
            for (size_t c = 0; c < B.sub.dim(); ++c) rhs[s * B.sub.dim() + c] = X.at(s, c);
        }
        auto gamma = sys.solve(rhs);
        internal_check(gamma.has_value(), "no left identity inside the minimal right ideal");
        e_corner.assign(B.sub.dim(), 0);
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < B.sub.dim(); ++c)
                e_corner[c] = F.add(e_corner[c], F.mul((*gamma)[r], X.at(r, c)));
        internal_check(B.sub.mul(e_corner, e_corner) == e_corner, "block idempotent not idempotent");
        internal_check(!vec_is_zero(e_corner), "block idempotent vanished");
    }
    return B.basis_rows.apply_row(e_corner);
}

std::vector<Fq> lift_idempotent(const Algebra& A, const QuotientAlgebra& q,
                                const std::vector<Fq>& ebar, size_t nilindex) {
    const FiniteField& F = A.field();
    std::vector<Fq> e = q.section.apply_row(ebar);

    size_t iters = 1;
    while ((1u << iters) < nilindex) ++iters;
    ++iters;
    for (size_t t = 0; t < iters; ++t) {
        std::vector<Fq> e2 = A.mul(e, e);
        if (e2 == e) break;
        std::vector<Fq> e3 = A.mul(e2, e);
        // 3e^2 - 2e^3, the standard lifting step along a nilpotent ideal.
        std::vector<Fq> next(A.dim(), 0);
        Fq three = F.from_int(3), two = F.from_int(2);
        for (size_t k = 0; k < A.dim(); ++k)
            next[k] = F.sub(F.mul(three, e2[k]), F.mul(two, e3[k]));
        e = std::move(next);
    }
    internal_check(A.mul(e, e) == e, "idempotent lift did not converge");
    internal_check(q.proj.apply_row(e) == ebar, "lift changed the residue");
    internal_check(!vec_is_zero(e), "lifted idempotent vanished");
    return e;
}

}  // namespace hopfk
