#include "hopfk/module_rep.hpp"

#include "hopfk/errors.hpp"

namespace hopfk {

ModuleRep ModuleRep::validate(AlgebraPtr A, std::vector<FieldMatrix> action) {
    internal_check(A != nullptr, "module needs an algebra");
    size_t n = A->dim();
    internal_check(action.size() == n, "one action matrix per algebra basis element");
    const FiniteField& F = A->field();
    size_t d = action.empty() ? 0 : action[0].rows();
    for (const auto& R : action)
        internal_check(R.rows() == d && R.cols() == d && R.field() == F,
                       "action matrices must be square of equal size over the base field");

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FieldMatrix lhs = action[i].mul(action[j]);
            FieldMatrix rhs(F, d, d);
            std::vector<Fq> c = A->mult(i, j);
            for (size_t k = 0; k < n; ++k)
                if (c[k] != 0) rhs = rhs.add(action[k].scaled(c[k]));
            if (!(lhs == rhs))
                throw MathError("NotAModule", "action matrices violate the structure constants");
        }
    FieldMatrix unit_act(F, d, d);
    for (size_t i = 0; i < n; ++i)
        if (A->unit()[i] != 0) unit_act = unit_act.add(action[i].scaled(A->unit()[i]));
    if (!unit_act.is_identity())
        throw MathError("NotAModule", "unit does not act as the identity");
    return ModuleRep(std::move(A), d, std::move(action));
}

std::vector<Fq> ModuleRep::act(const std::vector<Fq>& v, const std::vector<Fq>& a) const {
    return act_matrix(a).apply_row(v);
}

FieldMatrix ModuleRep::act_matrix(const std::vector<Fq>& a) const {
    internal_check(a.size() == A_->dim(), "algebra element length mismatch");
    const FiniteField& F = field();
    FieldMatrix R(F, dim_, dim_);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) R = R.add(action_[i].scaled(a[i]));
    return R;
}

ModuleRep regular_module(const AlgebraPtr& A) {
    std::vector<FieldMatrix> action;
    for (size_t i = 0; i < A->dim(); ++i) action.push_back(A->rmul_basis(i));
    return ModuleRep::validate(A, std::move(action));
}

FieldMatrix spin(const ModuleRep& M, const FieldMatrix& seed_rows) {
    const FiniteField& F = M.field();
    internal_check(seed_rows.cols() == M.dim(), "seed vector length mismatch");
    EchelonBasis span(F, M.dim());
    std::vector<std::vector<Fq>> frontier;
    for (size_t r = 0; r < seed_rows.rows(); ++r)
        if (span.insert(seed_rows.row(r))) frontier.push_back(seed_rows.row(r));
    while (!frontier.empty()) {
        std::vector<std::vector<Fq>> next;
        for (const auto& v : frontier)
            for (size_t i = 0; i < M.algebra().dim(); ++i) {
                std::vector<Fq> w = M.action(i).apply_row(v);
                if (span.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return span.as_matrix();
}

SubmoduleRep submodule_rep(const ModuleRep& M, const FieldMatrix& rows) {
    const FiniteField& F = M.field();
    EchelonBasis span(F, M.dim());
    for (size_t r = 0; r < rows.rows(); ++r) span.insert(rows.row(r));
    FieldMatrix basis = span.as_matrix();
    size_t d = basis.rows();

    std::vector<FieldMatrix> action;
    for (size_t i = 0; i < M.algebra().dim(); ++i) {
        FieldMatrix T(F, d, d);
        for (size_t r = 0; r < d; ++r) {
            std::vector<Fq> w = M.action(i).apply_row(basis.row(r));
            auto coords = span.coordinates(w);
            if (!coords) throw MathError("NotInvariant", "span is not a submodule");
            T.set_row(r, *coords);
        }
        action.push_back(std::move(T));
    }
    ModuleRep rep = ModuleRep::validate(M.algebra_ptr(), std::move(action));
    return SubmoduleRep{std::move(rep), std::move(basis)};
}

QuotientRep quotient_rep(const ModuleRep& M, const FieldMatrix& rows) {
    const FiniteField& F = M.field();
    EchelonBasis span(F, M.dim());
    for (size_t r = 0; r < rows.rows(); ++r) span.insert(rows.row(r));
    for (size_t r = 0; r < span.dim(); ++r)
        for (size_t i = 0; i < M.algebra().dim(); ++i)
            if (!span.contains(M.action(i).apply_row(span.as_matrix().row(r))))
                throw MathError("NotInvariant", "span is not a submodule");

    std::vector<size_t> comp = span.non_pivots();
    size_t d = comp.size();
    FieldMatrix projection(F, M.dim(), d);
    for (size_t i = 0; i < M.dim(); ++i) {
        std::vector<Fq> e(M.dim(), 0);
        e[i] = F.one();
        std::vector<Fq> w = span.reduce(e);
        for (size_t k = 0; k < d; ++k) projection.at(i, k) = w[comp[k]];
    }
    std::vector<FieldMatrix> action;
    for (size_t i = 0; i < M.algebra().dim(); ++i) {
        FieldMatrix Q(F, d, d);
        for (size_t k = 0; k < d; ++k) {
            std::vector<Fq> e(M.dim(), 0);
            e[comp[k]] = F.one();
            Q.set_row(k, projection.apply_row(M.action(i).apply_row(e)));
        }
        action.push_back(std::move(Q));
    }
    ModuleRep rep = ModuleRep::validate(M.algebra_ptr(), std::move(action));
    return QuotientRep{std::move(rep), std::move(projection)};
}

ModuleRep direct_sum(const ModuleRep& M, const ModuleRep& N) {
    internal_check(M.same_algebra(N), "direct sum over different algebras");
    return direct_sum_many(M.algebra_ptr(), {M, N});
}

ModuleRep direct_sum_many(const AlgebraPtr& A, const std::vector<ModuleRep>& parts) {
    const FiniteField& F = A->field();
    size_t total = 0;
    for (const auto& P : parts) {
        internal_check(*P.algebra_ptr() == *A, "direct sum over different algebras");
        total += P.dim();
    }
    std::vector<FieldMatrix> action;
    for (size_t i = 0; i < A->dim(); ++i) {
        FieldMatrix R(F, total, total);
        size_t off = 0;
        for (const auto& P : parts) {
            for (size_t r = 0; r < P.dim(); ++r)
                for (size_t c = 0; c < P.dim(); ++c) R.at(off + r, off + c) = P.action(i).at(r, c);
            off += P.dim();
        }
        action.push_back(std::move(R));
    }
    return ModuleRep::validate(A, std::move(action));
}

HomBasis hom_space(const ModuleRep& M, const ModuleRep& N) {
    if (!M.same_algebra(N)) throw MathError("AlgebraMismatch", "hom between different algebras");
    const FiniteField& F = M.field();
    size_t m = M.dim(), n = N.dim();
    if (m == 0 || n == 0) return HomBasis{};

    // Intertwining with a generating set forces intertwining with all of A.
    std::vector<std::vector<Fq>> gens = M.algebra().generators();
    if (gens.empty()) gens.push_back(M.algebra().unit());

    FieldMatrix sys(F, gens.size() * m * n, m * n);
    size_t eq = 0;
    for (const auto& g : gens) {
        FieldMatrix RM = M.act_matrix(g);
        FieldMatrix RN = N.act_matrix(g);
        // Unknowns x[r*n+c] = X[r][c]; equation (r,c): (RM X - X RN)[r][c] = 0.
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < n; ++c) {
                for (size_t s = 0; s < m; ++s)
                    sys.at(eq, s * n + c) = F.add(sys.at(eq, s * n + c), RM.at(r, s));
                for (size_t s = 0; s < n; ++s)
                    sys.at(eq, r * n + s) = F.sub(sys.at(eq, r * n + s), RN.at(s, c));
                ++eq;
            }
    }
    FieldMatrix K = sys.kernel_basis();
    HomBasis out;
    for (size_t b = 0; b < K.rows(); ++b) {
        FieldMatrix X(F, m, n);
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < n; ++c) X.at(r, c) = K.at(b, r * n + c);
        for (size_t i = 0; i < M.algebra().dim(); ++i)
            internal_check(M.action(i).mul(X) == X.mul(N.action(i)),
                           "hom basis element fails to intertwine");
        out.basis.push_back(std::move(X));
    }
    return out;
}

FieldMatrix map_kernel_rows(const FieldMatrix& X) { return X.transpose().kernel_basis(); }

ModuleRep restrict_along(const AlgebraPtr& B, const FieldMatrix& map_rows, const ModuleRep& M) {
    internal_check(map_rows.rows() == B->dim() && map_rows.cols() == M.algebra().dim(),
                   "algebra map has wrong shape");
    std::vector<FieldMatrix> action;
    for (size_t i = 0; i < B->dim(); ++i) action.push_back(M.act_matrix(map_rows.row(i)));
    return ModuleRep::validate(B, std::move(action));
}

}  // namespace hopfk
