#include "hopfk/projective.hpp"

#include <algorithm>
#include <utility>

#include "hopfk/errors.hpp"

namespace hopfk {

namespace {

// Echelonized basis of M*e.
FieldMatrix image_rows(const ModuleRep& M, const std::vector<Fq>& e) {
    EchelonBasis eb(M.field(), M.dim());
    FieldMatrix E = M.act_matrix(e);
    for (size_t r = 0; r < E.rows(); ++r) eb.insert(E.row(r));
    return eb.as_matrix();
}

}  // namespace

AlgebraCtx make_ctx(AlgebraPtr alg, Prng& rng) {
    AlgebraData data = analyze(alg, rng);
    RadicalInfo rad = radical(alg, rng);
    return AlgebraCtx{std::move(alg), std::move(data), std::move(rad)};
}

ProjectiveCover projective_cover(const ModuleRep& M, const AlgebraCtx& ctx) {
    internal_check(M.algebra() == *ctx.alg, "module is over a different algebra");
    const FiniteField& F = M.field();
    const size_t nsimples = ctx.data.simples.simples.size();

    std::vector<std::vector<Fq>> mj;
    for (size_t j = 0; j < ctx.rad.rows.rows(); ++j) {
        FieldMatrix R = M.act_matrix(ctx.rad.rows.row(j));
        for (size_t r = 0; r < M.dim(); ++r) mj.push_back(R.row(r));
    }
    QuotientRep topq = quotient_rep(M, FieldMatrix::from_rows(F, M.dim(), mj));

    /* Generators are picked greedily from M*e_i, one simple at a time.  A
     * candidate v is taken only when its image in top(M) falls outside the
     * e_i-corner of the submodule generated so far; each accepted pick then
     * enlarges that corner by exactly one line over End(S_i), so the number
     * of picks for simple i is dim Hom(M, S_i) / dim End(S_i).  Corners of
     * distinct simples live in orthogonal blocks of the semisimple quotient,
     * so the counts do not interfere.
     */
    std::vector<std::vector<std::vector<Fq>>> chosen(nsimples);
    EchelonBasis gen(F, M.dim());
    for (size_t i = 0; i < nsimples; ++i) {
        const std::vector<Fq>& e = ctx.data.pims.idempotents[i];
        FieldMatrix tope = topq.rep.act_matrix(e);
        auto corner = [&]() {
            EchelonBasis t(F, topq.rep.dim());
            for (size_t r = 0; r < gen.dim(); ++r)
                t.insert(tope.apply_row(topq.projection.apply_row(gen.as_matrix().row(r))));
            return t;
        };
        EchelonBasis t = corner();
        FieldMatrix cand = image_rows(M, e);
        for (size_t r = 0; r < cand.rows(); ++r) {
            std::vector<Fq> v = cand.row(r);
            if (t.contains(topq.projection.apply_row(v))) continue;
            chosen[i].push_back(v);
            FieldMatrix sp = spin(M, FieldMatrix::from_rows(F, M.dim(), {v}));
            for (size_t s = 0; s < sp.rows(); ++s) gen.insert(sp.row(s));
            t = corner();
        }
        size_t hom = hom_space(M, ctx.data.simples.simples[i]).dim();
        size_t endo = ctx.data.simples.endo_dims[i];
        internal_check(hom % endo == 0, "hom dimension not divisible by the endo degree");
        internal_check(chosen[i].size() == hom / endo, "cover multiplicity mismatch");
    }
    internal_check(gen.dim() == M.dim(), "cover generators do not span the module");

    std::vector<ModuleRep> parts;
    std::vector<std::vector<Fq>> srows;
    std::vector<size_t> mult(nsimples, 0);
    for (size_t i = 0; i < nsimples; ++i) {
        mult[i] = chosen[i].size();
        const FieldMatrix& incl = ctx.data.pims.inclusions[i];
        for (const auto& v : chosen[i]) {
            parts.push_back(ctx.data.pims.pims[i]);
            // The copy of P_i = e_i A maps by x -> v*x, evaluated on the
            // basis of P_i written out as algebra elements.
            for (size_t r = 0; r < incl.rows(); ++r) srows.push_back(M.act(v, incl.row(r)));
        }
    }
    ModuleRep cover = direct_sum_many(ctx.alg, parts);
    FieldMatrix surj = FieldMatrix::from_rows(F, M.dim(), srows);
    internal_check(surj.rows() == cover.dim(), "cover dimension mismatch");
    for (size_t k = 0; k < ctx.alg->dim(); ++k)
        internal_check(cover.action(k).mul(surj) == surj.mul(M.action(k)),
                       "cover map is not module linear");
    internal_check(surj.rank() == M.dim(), "cover map is not onto");
    return ProjectiveCover{std::move(cover), std::move(surj), std::move(mult)};
}

bool is_projective(const ModuleRep& M, const AlgebraCtx& ctx) {
    return projective_cover(M, ctx).cover.dim() == M.dim();
}

ModuleRep syzygy(const ModuleRep& M, const AlgebraCtx& ctx) {
    ProjectiveCover c = projective_cover(M, ctx);
    return submodule_rep(c.cover, map_kernel_rows(c.surjection)).rep;
}

std::optional<size_t> proj_dim(const ModuleRep& M, const AlgebraCtx& ctx, size_t bound) {
    ModuleRep cur = M;
    for (size_t k = 0; k <= bound; ++k) {
        ProjectiveCover c = projective_cover(cur, ctx);
        if (c.cover.dim() == cur.dim()) return k;
        cur = submodule_rep(c.cover, map_kernel_rows(c.surjection)).rep;
    }
    return std::nullopt;
}

std::optional<size_t> gldim(const AlgebraCtx& ctx, size_t bound) {
    size_t best = 0;
    for (const auto& S : ctx.data.simples.simples) {
        std::optional<size_t> d = proj_dim(S, ctx, bound);
        if (!d) return std::nullopt;
        best = std::max(best, *d);
    }
    return best;
}

}  // namespace hopfk
