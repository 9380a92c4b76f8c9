#include "hopfk/galois.hpp"

#include <string>
#include <utility>

#include "hopfk/errors.hpp"

namespace hopfk {

namespace {

std::string vec_str(const std::vector<Fq>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<Fq> unit_vec(size_t n, size_t i) {
    std::vector<Fq> e(n, 0);
    e[i] = 1;
    return e;
}

}  // namespace

CoinvAlgebra coinvariants(const ComoduleAlgebra& CA) {
    const FiniteField& F = CA.field();
    const Algebra& A = CA.algebra();
    size_t nA = A.dim(), nH = CA.hopf().dim();
    const std::vector<Fq>& uH = CA.hopf().algebra().unit();
    // Column kernel of rho(a) - a (x) 1.
    FieldMatrix D(F, nA * nH, nA);
    for (size_t j = 0; j < nA; ++j)
        for (size_t p = 0; p < nA; ++p)
            for (size_t q = 0; q < nH; ++q) {
                Fq v = CA.coaction().at(p * nH + q, j);
                if (p == j) v = F.sub(v, uH[q]);
                D.at(p * nH + q, j) = v;
            }
    FieldMatrix rows = D.kernel_basis();
    for (size_t r = 0; r < rows.rows(); ++r)
        internal_check(CA.coaction().apply_col(rows.row(r)) ==
                           [&] {
                               std::vector<Fq> t(nA * nH, 0);
                               for (size_t i = 0; i < nA; ++i)
                                   for (size_t k = 0; k < nH; ++k)
                                       t[i * nH + k] = F.mul(rows.row(r)[i], uH[k]);
                               return t;
                           }(),
                       "coinvariant candidate fails rho(b) = b (x) 1");
    Subalgebra S = subalgebra_on_span(A, rows);
    return CoinvAlgebra{std::make_shared<const Algebra>(std::move(S.sub)),
                        std::move(S.basis_rows)};
}

RelTensorRep relative_tensor(const AlgebraPtr& A, const CoinvAlgebra& B, const ModuleRep& N) {
    if (N.algebra() != *B.alg) throw MathError("AlgebraMismatch", "N is not a module over B");
    internal_check(B.rows.cols() == A->dim(), "embedding width does not match A");
    const FiniteField& F = A->field();
    size_t nA = A->dim(), dN = N.dim(), dB = B.alg->dim();
    FieldMatrix I_N = FieldMatrix::identity(F, dN);

    std::vector<FieldMatrix> action;
    for (size_t j = 0; j < nA; ++j) action.push_back(I_N.kronecker(A->rmul_basis(j)));
    ModuleRep full = ModuleRep::validate(A, std::move(action));

    std::vector<std::vector<Fq>> relations;
    for (size_t b = 0; b < dB; ++b) {
        FieldMatrix L = A->lmul(B.rows.row(b));  // row y = b * e_y
        for (size_t r = 0; r < dN; ++r) {
            std::vector<Fq> nb = N.action(b).row(r);
            for (size_t y = 0; y < nA; ++y) {
                std::vector<Fq> w(dN * nA, 0);
                for (size_t s = 0; s < dN; ++s) w[s * nA + y] = nb[s];
                std::vector<Fq> by = L.row(y);
                for (size_t z = 0; z < nA; ++z)
                    w[r * nA + z] = F.sub(w[r * nA + z], by[z]);
                relations.push_back(std::move(w));
            }
        }
    }
    QuotientRep q = quotient_rep(full, FieldMatrix::from_rows(F, dN * nA, relations));

    size_t d = q.rep.dim();
    FieldMatrix sec(F, d, dN * nA);
    FieldMatrix pt = q.projection.transpose();
    for (size_t k = 0; k < d; ++k) {
        std::optional<std::vector<Fq>> sol = pt.solve(unit_vec(d, k));
        internal_check(sol.has_value(), "projection has no section");
        sec.set_row(k, *sol);
    }
    internal_check(sec.mul(q.projection).is_identity(), "section is not a right inverse");
    return RelTensorRep{std::move(q.rep), std::move(q.projection), std::move(sec)};
}

ModuleRep restrict_to_coinv(const CoinvAlgebra& B, const ModuleRep& M) {
    internal_check(B.rows.cols() == M.algebra().dim(), "embedding width does not match A");
    std::vector<FieldMatrix> action;
    for (size_t b = 0; b < B.alg->dim(); ++b) action.push_back(M.act_matrix(B.rows.row(b)));
    return ModuleRep::validate(B.alg, std::move(action));
}

GaloisExtension galois_check(const ComoduleAlgebra& CA, Prng& rng) {
    const FiniteField& F = CA.field();
    const AlgebraPtr& A = CA.algebra_ptr();
    size_t nA = A->dim(), nH = CA.hopf().dim();

    CoinvAlgebra B = coinvariants(CA);
    ModuleRep AresB = restrict_to_coinv(B, regular_module(A));
    RelTensorRep rel = relative_tensor(A, B, AresB);

    FieldMatrix betafull(F, nA * nA, nA * nH);
    for (size_t x = 0; x < nA; ++x)
        for (size_t y = 0; y < nA; ++y)
            for (size_t p = 0; p < nA; ++p)
                for (size_t q = 0; q < nH; ++q) {
                    Fq c = CA.coaction().at(p * nH + q, y);
                    if (c == 0) continue;
                    std::vector<Fq> xp = A->mult(x, p);
                    for (size_t i = 0; i < nA; ++i)
                        betafull.at(x * nA + y, i * nH + q) = F.add(
                            betafull.at(x * nA + y, i * nH + q), F.mul(c, xp[i]));
                }

    FieldMatrix Z = map_kernel_rows(rel.projection);
    for (size_t z = 0; z < Z.rows(); ++z)
        internal_check(vec_is_zero(betafull.apply_row(Z.row(z))),
                       "beta does not kill the tensor relations");
    FieldMatrix beta = rel.section.mul(betafull);

    // Bimodule property checked on the full tensor square: left action is
    // a (x (x) y) = ax (x) y, right action on A (x) H is (z (x) h) b =
    // z b_0 (x) h b_1.
    FieldMatrix I_A = FieldMatrix::identity(F, nA);
    FieldMatrix I_H = FieldMatrix::identity(F, nH);
    const Algebra& Halg = CA.hopf().algebra();
    for (size_t t = 0; t < nA; ++t) {
        internal_check(A->lmul_basis(t).kronecker(I_A).mul(betafull) ==
                           betafull.mul(A->lmul_basis(t).kronecker(I_H)),
                       "beta is not left A-linear");
        FieldMatrix R(F, nA * nH, nA * nH);
        for (size_t p = 0; p < nA; ++p)
            for (size_t q = 0; q < nH; ++q) {
                Fq c = CA.coaction().at(p * nH + q, t);
                if (c == 0) continue;
                R = R.add(A->rmul_basis(p).kronecker(Halg.rmul_basis(q)).scaled(c));
            }
        internal_check(I_A.kronecker(A->rmul_basis(t)).mul(betafull) == betafull.mul(R),
                       "beta is not right A-linear");
    }

    bool galois = true;
    std::string diag;
    if (rel.rep.dim() != nA * nH) {
        galois = false;
        diag = "dimension defect: dim A (x)_B A = " + std::to_string(rel.rep.dim()) +
               ", dim A (x) H = " + std::to_string(nA * nH);
    } else {
        FieldMatrix ker = map_kernel_rows(beta);
        if (ker.rows() != 0) {
            galois = false;
            diag = "beta has kernel of dimension " + std::to_string(ker.rows()) +
                   "; witness " + vec_str(ker.row(0));
        }
    }
    if (galois) {
        AlgebraCtx bctx = make_ctx(B.alg, rng);
        internal_check(is_projective(AresB, bctx),
                       "Galois extension with A not projective over B");
    }
    return GaloisExtension{CA, std::move(B), std::move(rel), std::move(beta), galois,
                           std::move(diag)};
}

ModuleRep induce(const GaloisExtension& ext, const ModuleRep& N) {
    return relative_tensor(ext.ca.algebra_ptr(), ext.coinv, N).rep;
}

ModuleRep restrict_module(const GaloisExtension& ext, const ModuleRep& M) {
    return restrict_to_coinv(ext.coinv, M);
}

IsoCert verify_ind_res(const GaloisExtension& ext, const ModuleRep& M) {
    if (!ext.galois) throw MathError("NotGalois", ext.diagnostic);
    const FiniteField& F = ext.ca.field();
    const AlgebraPtr& A = ext.ca.algebra_ptr();
    size_t nA = A->dim(), nH = ext.ca.hopf().dim(), dM = M.dim();

    ModuleRep resM = restrict_to_coinv(ext.coinv, M);
    RelTensorRep rt = relative_tensor(A, ext.coinv, resM);
    ModuleRep rhs = twist(ext.ca, M, regular_module(ext.ca.hopf().algebra_ptr()));

    FieldMatrix thetafull(F, dM * nA, dM * nH);
    for (size_t r = 0; r < dM; ++r)
        for (size_t y = 0; y < nA; ++y)
            for (size_t p = 0; p < nA; ++p)
                for (size_t q = 0; q < nH; ++q) {
                    Fq c = ext.ca.coaction().at(p * nH + q, y);
                    if (c == 0) continue;
                    for (size_t s = 0; s < dM; ++s)
                        thetafull.at(r * nA + y, s * nH + q) =
                            F.add(thetafull.at(r * nA + y, s * nH + q),
                                  F.mul(c, M.action(p).at(r, s)));
                }

    FieldMatrix Z = map_kernel_rows(rt.projection);
    for (size_t z = 0; z < Z.rows(); ++z)
        if (!vec_is_zero(thetafull.apply_row(Z.row(z))))
            throw MathError("VerificationFailed", "theta does not respect the relations");
    if (rt.rep.dim() != dM * nH)
        throw MathError("VerificationFailed",
                        "Ind Res M has dimension " + std::to_string(rt.rep.dim()) +
                            " but M (x) H has " + std::to_string(dM * nH));
    FieldMatrix theta = rt.section.mul(thetafull);
    for (size_t j = 0; j < nA; ++j)
        if (rt.rep.action(j).mul(theta) != theta.mul(rhs.action(j)))
            throw MathError("VerificationFailed",
                            "theta does not intertwine basis element " + std::to_string(j));
    if (theta.rank() != rt.rep.dim())
        throw MathError("VerificationFailed", "theta is not invertible");
    return IsoCert{std::move(rt.rep), std::move(rhs), std::move(theta)};
}

IsoCert verify_ind_twist(const GaloisExtension& ext, const ModuleRep& N, const ModuleRep& V) {
    if (!ext.galois) throw MathError("NotGalois", ext.diagnostic);
    if (N.algebra() != *ext.coinv.alg)
        throw MathError("AlgebraMismatch", "N is not a module over B");
    if (V.algebra() != ext.ca.hopf().algebra())
        throw MathError("AlgebraMismatch", "V is not a module over H");
    const FiniteField& F = ext.ca.field();
    const AlgebraPtr& A = ext.ca.algebra_ptr();
    size_t nA = A->dim(), nH = ext.ca.hopf().dim();
    size_t dN = N.dim(), dV = V.dim();

    // N (x) V as a B-module; coinvariance of b makes the V factor inert.
    std::vector<FieldMatrix> nv_action;
    FieldMatrix I_V = FieldMatrix::identity(F, dV);
    for (size_t b = 0; b < ext.coinv.alg->dim(); ++b)
        nv_action.push_back(N.action(b).kronecker(I_V));
    ModuleRep NV = ModuleRep::validate(ext.coinv.alg, std::move(nv_action));

    RelTensorRep lhs = relative_tensor(A, ext.coinv, NV);
    RelTensorRep indN = relative_tensor(A, ext.coinv, N);
    ModuleRep rhs = twist(ext.ca, indN.rep, V);
    size_t dL = lhs.rep.dim(), dI = indN.rep.dim();

    FieldMatrix phifull(F, dN * dV * nA, dI * dV);
    for (size_t r = 0; r < dN; ++r)
        for (size_t s = 0; s < dV; ++s)
            for (size_t y = 0; y < nA; ++y) {
                size_t row = (r * dV + s) * nA + y;
                for (size_t p = 0; p < nA; ++p)
                    for (size_t q = 0; q < nH; ++q) {
                        Fq c = ext.ca.coaction().at(p * nH + q, y);
                        if (c == 0) continue;
                        for (size_t t = 0; t < dI; ++t) {
                            Fq pc = indN.projection.at(r * nA + p, t);
                            if (pc == 0) continue;
                            Fq cc = F.mul(c, pc);
                            for (size_t s2 = 0; s2 < dV; ++s2)
                                phifull.at(row, t * dV + s2) = F.add(
                                    phifull.at(row, t * dV + s2),
                                    F.mul(cc, V.action(q).at(s, s2)));
                        }
                    }
            }
    FieldMatrix ZL = map_kernel_rows(lhs.projection);
    for (size_t z = 0; z < ZL.rows(); ++z)
        if (!vec_is_zero(phifull.apply_row(ZL.row(z))))
            throw MathError("VerificationFailed", "phi does not respect the relations");
    FieldMatrix phi = lhs.section.mul(phifull);

    FieldMatrix sigma_inv = antipode_inverse(ext.ca.hopf());
    std::vector<FieldMatrix> W;
    for (size_t q = 0; q < nH; ++q) W.push_back(V.act_matrix(sigma_inv.col(q)));

    FieldMatrix psifull(F, dN * nA * dV, dL);
    for (size_t r = 0; r < dN; ++r)
        for (size_t y = 0; y < nA; ++y)
            for (size_t s = 0; s < dV; ++s) {
                size_t row = (r * nA + y) * dV + s;
                for (size_t p = 0; p < nA; ++p)
                    for (size_t q = 0; q < nH; ++q) {
                        Fq c = ext.ca.coaction().at(p * nH + q, y);
                        if (c == 0) continue;
                        for (size_t w = 0; w < dV; ++w) {
                            Fq wc = W[q].at(s, w);
                            if (wc == 0) continue;
                            Fq cc = F.mul(c, wc);
                            size_t fidx = (r * dV + w) * nA + p;
                            for (size_t u = 0; u < dL; ++u)
                                psifull.at(row, u) =
                                    F.add(psifull.at(row, u),
                                          F.mul(cc, lhs.projection.at(fidx, u)));
                        }
                    }
            }
    FieldMatrix ZN = map_kernel_rows(indN.projection);
    if (ZN.rows() != 0) {
        FieldMatrix ZNV = ZN.kronecker(I_V);
        for (size_t z = 0; z < ZNV.rows(); ++z)
            if (!vec_is_zero(psifull.apply_row(ZNV.row(z))))
                throw MathError("VerificationFailed", "psi does not respect the relations");
    }
    FieldMatrix psi = indN.section.kronecker(I_V).mul(psifull);

    if (!phi.mul(psi).is_identity())
        throw MathError("VerificationFailed", "phi psi is not the identity");
    if (!psi.mul(phi).is_identity())
        throw MathError("VerificationFailed", "psi phi is not the identity");
    for (size_t j = 0; j < nA; ++j)
        if (lhs.rep.action(j).mul(phi) != phi.mul(rhs.action(j)))
            throw MathError("VerificationFailed",
                            "phi does not intertwine basis element " + std::to_string(j));
    return IsoCert{std::move(lhs.rep), std::move(rhs), std::move(phi)};
}

bool in_category_C(const GaloisExtension& ext, const AlgebraCtx& bctx, const ModuleRep& M) {
    internal_check(*bctx.alg == *ext.coinv.alg, "context algebra is not B");
    return is_projective(restrict_to_coinv(ext.coinv, M), bctx);
}

ComoduleAlgebra crossed_product(const CrossedProductSpec& spec) {
    const AlgebraPtr& Bp = spec.base;
    const FiniteField& F = Bp->field();
    size_t nB = Bp->dim();
    GroupTableInfo info = check_group(spec.group);
    size_t m = spec.group.size();
    if (spec.action.size() != m || spec.cocycle.size() != m)
        throw MathError("BadShape", "need one action matrix and cocycle row per group element");

    for (size_t g = 0; g < m; ++g) {
        const FieldMatrix& ag = spec.action[g];
        if (ag.rows() != nB || ag.cols() != nB)
            throw MathError("BadShape", "action matrix has wrong shape");
        if (!ag.inverse())
            throw MathError("NotAutomorphism", "action of element " + std::to_string(g) +
                                                   " is singular");
        if (ag.apply_col(Bp->unit()) != Bp->unit())
            throw MathError("NotAutomorphism",
                            "action of element " + std::to_string(g) + " moves the unit");
        for (size_t i = 0; i < nB; ++i)
            for (size_t j = 0; j < nB; ++j)
                if (ag.apply_col(Bp->mult(i, j)) != Bp->mul(ag.col(i), ag.col(j)))
                    throw MathError("NotAutomorphism",
                                    "action of element " + std::to_string(g) +
                                        " is not multiplicative on pair (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    if (!spec.action[info.identity].is_identity())
        throw MathError("NotAutomorphism", "identity element must act as the identity");

    for (size_t g = 0; g < m; ++g) {
        if (spec.cocycle[g].size() != m)
            throw MathError("BadShape", "cocycle row has wrong length");
        for (size_t h = 0; h < m; ++h) {
            const std::vector<Fq>& tau = spec.cocycle[g][h];
            if (tau.size() != nB) throw MathError("BadShape", "cocycle value has wrong length");
            if (!Bp->element_inverse(tau))
                throw MathError("CocycleConditionFails",
                                "value at (" + std::to_string(g) + ", " + std::to_string(h) +
                                    ") is not invertible");
        }
        if (spec.cocycle[info.identity][g] != Bp->unit() ||
            spec.cocycle[g][info.identity] != Bp->unit())
            throw MathError("CocycleConditionFails",
                            "normalization tau(1,g) = tau(g,1) = 1 fails at g = " +
                                std::to_string(g));
    }
    for (size_t g = 0; g < m; ++g)
        for (size_t h = 0; h < m; ++h) {
            for (size_t l = 0; l < m; ++l)
                if (Bp->mul(spec.action[g].apply_col(spec.cocycle[h][l]),
                            spec.cocycle[g][spec.group[h][l]]) !=
                    Bp->mul(spec.cocycle[g][h], spec.cocycle[spec.group[g][h]][l]))
                    throw MathError("CocycleConditionFails",
                                    "cocycle condition fails at (" + std::to_string(g) + ", " +
                                        std::to_string(h) + ", " + std::to_string(l) + ")");
            for (size_t b = 0; b < nB; ++b)
                if (Bp->mul(spec.action[g].apply_col(spec.action[h].col(b)),
                            spec.cocycle[g][h]) !=
                    Bp->mul(spec.cocycle[g][h], spec.action[spec.group[g][h]].col(b)))
                    throw MathError("CocycleConditionFails",
                                    "twisted module condition fails at (" + std::to_string(g) +
                                        ", " + std::to_string(h) + ") on basis " +
                                        std::to_string(b));
        }

    size_t N = nB * m;
    auto idx = [&](size_t i, size_t g) { return i * m + g; };
    FieldMatrix table(F, N * N, N);
    for (size_t i = 0; i < nB; ++i)
        for (size_t g = 0; g < m; ++g)
            for (size_t j = 0; j < nB; ++j)
                for (size_t h = 0; h < m; ++h) {
                    std::vector<Fq> ei(nB, 0);
                    ei[i] = F.one();
                    std::vector<Fq> w =
                        Bp->mul(Bp->mul(ei, spec.action[g].col(j)), spec.cocycle[g][h]);
                    size_t gh = spec.group[g][h];
                    for (size_t k = 0; k < nB; ++k)
                        table.at(idx(i, g) * N + idx(j, h), idx(k, gh)) = w[k];
                }
    std::vector<std::string> names(N);
    for (size_t i = 0; i < nB; ++i)
        for (size_t g = 0; g < m; ++g)
            names[idx(i, g)] = Bp->basis_names()[i] + "*g" + std::to_string(g);
    auto alg = std::make_shared<const Algebra>(Algebra::validate(F, table, names));

    HopfAlgebra H = group_algebra(spec.group, F);
    FieldMatrix coaction(F, N * m, N);
    for (size_t i = 0; i < nB; ++i)
        for (size_t g = 0; g < m; ++g)
            coaction.at(idx(i, g) * m + g, idx(i, g)) = F.one();
    return ComoduleAlgebra::validate(std::move(alg), std::move(H), std::move(coaction));
}

}  // namespace hopfk
