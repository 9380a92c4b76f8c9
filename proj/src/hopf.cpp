#include "hopfk/hopf.hpp"

#include <string>
#include <utility>

#include "hopfk/errors.hpp"

namespace hopfk {

namespace {

std::string pair_str(size_t i, size_t j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

// Multiplication H (x) H -> H as an n x n^2 matrix, column (j,l) = a_j a_l.
FieldMatrix mult_matrix(const Algebra& A) {
    const FiniteField& F = A.field();
    size_t n = A.dim();
    FieldMatrix m(F, n, n * n);
    for (size_t j = 0; j < n; ++j)
        for (size_t l = 0; l < n; ++l) {
            std::vector<Fq> p = A.mult(j, l);
            for (size_t r = 0; r < n; ++r) m.at(r, j * n + l) = p[r];
        }
    return m;
}

std::vector<Fq> tensor_of(const FiniteField& F, const std::vector<Fq>& a,
                          const std::vector<Fq>& b) {
    std::vector<Fq> t(a.size() * b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0)) continue;
        for (size_t k = 0; k < b.size(); ++k) t[i * b.size() + k] = F.mul(a[i], b[k]);
    }
    return t;
}

}  // namespace

std::vector<Fq> tensor_product_mul(const Algebra& A, const Algebra& B, const std::vector<Fq>& u,
                                   const std::vector<Fq>& v) {
    const FiniteField& F = A.field();
    size_t nA = A.dim(), nB = B.dim();
    internal_check(u.size() == nA * nB && v.size() == nA * nB, "tensor element size mismatch");
    std::vector<Fq> w(nA * nB, 0);
    for (size_t p = 0; p < nA; ++p)
        for (size_t q = 0; q < nB; ++q) {
            Fq cu = u[p * nB + q];
            if ((cu == 0)) continue;
            for (size_t p2 = 0; p2 < nA; ++p2)
                for (size_t q2 = 0; q2 < nB; ++q2) {
                    Fq cv = v[p2 * nB + q2];
                    if ((cv == 0)) continue;
                    Fq c = F.mul(cu, cv);
                    std::vector<Fq> pa = A.mult(p, p2);
                    std::vector<Fq> pb = B.mult(q, q2);
                    for (size_t r = 0; r < nA; ++r) {
                        if ((pa[r] == 0)) continue;
                        Fq cr = F.mul(c, pa[r]);
                        for (size_t s = 0; s < nB; ++s)
                            w[r * nB + s] =
                                F.add(w[r * nB + s], F.mul(cr, pb[s]));
                    }
                }
        }
    return w;
}

Fq HopfAlgebra::counit_of(const std::vector<Fq>& a) const {
    const FiniteField& F = field();
    Fq e = 0;
    for (size_t i = 0; i < a.size(); ++i) e = F.add(e, F.mul(counit_.at(0, i), a[i]));
    return e;
}

HopfAlgebra HopfAlgebra::validate(AlgebraPtr alg, FieldMatrix comul, FieldMatrix counit,
                                  FieldMatrix antipode) {
    const FiniteField& F = alg->field();
    size_t n = alg->dim();
    if (comul.rows() != n * n || comul.cols() != n)
        throw MathError("BadShape", "comultiplication must be n^2 x n");
    if (counit.rows() != 1 || counit.cols() != n)
        throw MathError("BadShape", "counit must be 1 x n");
    if (antipode.rows() != n || antipode.cols() != n)
        throw MathError("BadShape", "antipode must be n x n");

    FieldMatrix I = FieldMatrix::identity(F, n);
    if (comul.kronecker(I).mul(comul) != I.kronecker(comul).mul(comul))
        throw MathError("NotCoassociative",
                        "(Delta (x) id) Delta differs from (id (x) Delta) Delta");
    if (counit.kronecker(I).mul(comul) != I)
        throw MathError("CounitAxiomFails", "(eps (x) id) Delta is not the identity");
    if (I.kronecker(counit).mul(comul) != I)
        throw MathError("CounitAxiomFails", "(id (x) eps) Delta is not the identity");

    const std::vector<Fq>& u = alg->unit();
    if (comul.apply_col(u) != tensor_of(F, u, u))
        throw MathError("NotBialgebraMap", "Delta(1) is not 1 (x) 1");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (comul.apply_col(alg->mult(i, j)) !=
                tensor_product_mul(*alg, *alg, comul.col(i), comul.col(j)))
                throw MathError("NotBialgebraMap",
                                "Delta is not multiplicative on basis pair " + pair_str(i, j));
    {
        Fq eu = 0;
        for (size_t i = 0; i < n; ++i) eu = F.add(eu, F.mul(counit.at(0, i), u[i]));
        if (eu != F.one()) throw MathError("NotBialgebraMap", "eps(1) is not 1");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                std::vector<Fq> p = alg->mult(i, j);
                Fq ep = 0;
                for (size_t r = 0; r < n; ++r) ep = F.add(ep, F.mul(counit.at(0, r), p[r]));
                if (ep != F.mul(counit.at(0, i), counit.at(0, j)))
                    throw MathError("NotBialgebraMap",
                                    "eps is not multiplicative on basis pair " + pair_str(i, j));
            }
    }

    FieldMatrix m = mult_matrix(*alg);
    FieldMatrix ue(F, n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t r = 0; r < n; ++r) ue.at(r, j) = F.mul(u[r], counit.at(0, j));
    if (m.mul(antipode.kronecker(I)).mul(comul) != ue)
        throw MathError("AntipodeAxiomFails", "m (sigma (x) id) Delta differs from u eps");
    if (m.mul(I.kronecker(antipode)).mul(comul) != ue)
        throw MathError("AntipodeAxiomFails", "m (id (x) sigma) Delta differs from u eps");

    return HopfAlgebra(std::move(alg), std::move(comul), std::move(counit), std::move(antipode));
}

FieldMatrix antipode_inverse(const HopfAlgebra& H) {
    const FiniteField& F = H.field();
    size_t n = H.dim();
    std::optional<FieldMatrix> inv = H.antipode().inverse();
    if (!inv) throw MathError("AntipodeSingular", "antipode matrix is not invertible");
    const Algebra& A = H.algebra();
    // sigma^{-1}(h_2) h_1 = eps(h) 1 = h_2 sigma^{-1}(h_1) on every basis
    // element; both sums run over the stored Delta coefficients.
    for (size_t j = 0; j < n; ++j) {
        std::vector<Fq> lhs(n, 0), rhs(n, 0);
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < n; ++q) {
                Fq c = H.comul().at(p * n + q, j);
                if ((c == 0)) continue;
                std::vector<Fq> ep(n, 0), eq(n, 0);
                ep[p] = F.one();
                eq[q] = F.one();
                lhs = vec_add(F, lhs, vec_scale(F, c, A.mul(inv->apply_col(eq), ep)));
                rhs = vec_add(F, rhs, vec_scale(F, c, A.mul(eq, inv->apply_col(ep))));
            }
        std::vector<Fq> e1(n, 0);
        std::vector<Fq> target = vec_scale(F, H.counit().at(0, j), A.unit());
        internal_check(lhs == target, "antipode inverse fails the left convolution identity");
        internal_check(rhs == target, "antipode inverse fails the right convolution identity");
    }
    return *inv;
}

ModuleRep trivial_module(const HopfAlgebra& H) {
    const FiniteField& F = H.field();
    std::vector<FieldMatrix> action;
    for (size_t i = 0; i < H.dim(); ++i) {
        FieldMatrix a(F, 1, 1);
        a.at(0, 0) = H.counit().at(0, i);
        action.push_back(std::move(a));
    }
    return ModuleRep::validate(H.algebra_ptr(), std::move(action));
}

ComoduleAlgebra ComoduleAlgebra::validate(AlgebraPtr alg, HopfAlgebra hopf,
                                          FieldMatrix coaction) {
    const FiniteField& F = alg->field();
    size_t nA = alg->dim(), nH = hopf.dim();
    if (coaction.rows() != nA * nH || coaction.cols() != nA)
        throw MathError("BadShape", "coaction must be (dimA*dimH) x dimA");

    if (coaction.apply_col(alg->unit()) != tensor_of(F, alg->unit(), hopf.algebra().unit()))
        throw MathError("NotComoduleAlgebraMap", "rho(1) is not 1 (x) 1");
    for (size_t i = 0; i < nA; ++i)
        for (size_t j = 0; j < nA; ++j)
            if (coaction.apply_col(alg->mult(i, j)) !=
                tensor_product_mul(*alg, hopf.algebra(), coaction.col(i), coaction.col(j)))
                throw MathError("NotComoduleAlgebraMap",
                                "rho is not multiplicative on basis pair " + pair_str(i, j));

    FieldMatrix IA = FieldMatrix::identity(F, nA);
    FieldMatrix IH = FieldMatrix::identity(F, nH);
    if (coaction.kronecker(IH).mul(coaction) != IA.kronecker(hopf.comul()).mul(coaction))
        throw MathError("CoactionAxiomFails",
                        "(rho (x) id) rho differs from (id (x) Delta) rho");
    if (IA.kronecker(hopf.counit()).mul(coaction) != IA)
        throw MathError("CoactionAxiomFails", "(id (x) eps) rho is not the identity");

    return ComoduleAlgebra(std::move(alg), std::move(hopf), std::move(coaction));
}

ComoduleAlgebra self_comodule(const HopfAlgebra& H) {
    return ComoduleAlgebra::validate(H.algebra_ptr(), H, H.comul());
}

ModuleRep twist(const ComoduleAlgebra& CA, const ModuleRep& M, const ModuleRep& V) {
    if (M.algebra() != CA.algebra()) throw MathError("AlgebraMismatch", "M is not over A");
    if (V.algebra() != CA.hopf().algebra())
        throw MathError("AlgebraMismatch", "V is not over the Hopf algebra");
    const FiniteField& F = CA.field();
    size_t nA = CA.algebra().dim(), nH = CA.hopf().dim();
    size_t d = M.dim() * V.dim();
    std::vector<FieldMatrix> action;
    for (size_t j = 0; j < nA; ++j) {
        FieldMatrix T(F, d, d);
        for (size_t p = 0; p < nA; ++p)
            for (size_t q = 0; q < nH; ++q) {
                Fq c = CA.coaction().at(p * nH + q, j);
                if ((c == 0)) continue;
                T = T.add(M.action(p).kronecker(V.action(q)).scaled(c));
            }
        action.push_back(std::move(T));
    }
    return ModuleRep::validate(M.algebra_ptr(), std::move(action));
}

GroupTableInfo check_group(const std::vector<std::vector<size_t>>& table) {
    size_t m = table.size();
    if (m == 0) throw MathError("NotAGroup", "empty table");
    for (size_t i = 0; i < m; ++i) {
        if (table[i].size() != m) throw MathError("NotAGroup", "table is not square");
        for (size_t j = 0; j < m; ++j)
            if (table[i][j] >= m) throw MathError("NotAGroup", "entry out of range");
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw MathError("NotAGroup", "associativity fails at (" + std::to_string(i) +
                                                     ", " + std::to_string(j) + ", " +
                                                     std::to_string(k) + ")");
    size_t id = m;
    for (size_t e = 0; e < m && id == m; ++e) {
        bool ok = true;
        for (size_t g = 0; g < m; ++g) ok = ok && table[e][g] == g && table[g][e] == g;
        if (ok) id = e;
    }
    if (id == m) throw MathError("NotAGroup", "no identity element");
    std::vector<size_t> inverse(m, m);
    for (size_t g = 0; g < m; ++g) {
        for (size_t h = 0; h < m; ++h)
            if (table[g][h] == id && table[h][g] == id) inverse[g] = h;
        if (inverse[g] == m)
            throw MathError("NotAGroup", "element " + std::to_string(g) + " has no inverse");
    }
    return GroupTableInfo{id, std::move(inverse)};
}

HopfAlgebra group_algebra(const std::vector<std::vector<size_t>>& table, const FiniteField& F) {
    GroupTableInfo info = check_group(table);
    size_t m = table.size();
    FieldMatrix mul_table(F, m * m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) mul_table.at(i * m + j, table[i][j]) = F.one();
    std::vector<std::string> names;
    for (size_t g = 0; g < m; ++g)
        names.push_back(g == info.identity ? std::string("1") : "g" + std::to_string(g));
    auto alg = std::make_shared<const Algebra>(Algebra::validate(F, mul_table, names));

    FieldMatrix comul(F, m * m, m), counit(F, 1, m), antipode(F, m, m);
    for (size_t g = 0; g < m; ++g) {
        comul.at(g * m + g, g) = F.one();
        counit.at(0, g) = F.one();
        antipode.at(info.inverse[g], g) = F.one();
    }
    return HopfAlgebra::validate(std::move(alg), std::move(comul), std::move(counit),
                                 std::move(antipode));
}

HopfAlgebra sweedler_taft(size_t n, const FiniteField& F, Fq q) {
    if (n < 2) throw MathError("NotPrimitiveRoot", "order must be at least 2");
    if ((q == 0)) throw MathError("NotPrimitiveRoot", "q = 0");
    std::vector<Fq> qpow(n + 1, F.one());
    for (size_t k = 1; k <= n; ++k) qpow[k] = F.mul(qpow[k - 1], q);
    for (size_t k = 1; k < n; ++k)
        if (qpow[k] == F.one())
            throw MathError("NotPrimitiveRoot",
                            "q^" + std::to_string(k) + " = 1 before the full order");
    if (qpow[n] != F.one()) throw MathError("NotPrimitiveRoot", "q^n is not 1");

    size_t N = n * n;
    auto idx = [&](size_t i, size_t j) { return i * n + j; };
    FieldMatrix table(F, N * N, N);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    if (j + l >= n) continue;  // x^n = 0
                    // g^i x^j g^k x^l = q^{jk} g^{i+k} x^{j+l}
                    table.at(idx(i, j) * N + idx(k, l), idx((i + k) % n, j + l)) =
                        qpow[(j * k) % n];
                }
    std::vector<std::string> names(N);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::string s;
            if (i == 1) s += "g";
            if (i > 1) s += "g" + std::to_string(i);
            if (j == 1) s += "x";
            if (j > 1) s += "x" + std::to_string(j);
            names[idx(i, j)] = s.empty() ? "1" : s;
        }
    auto alg = std::make_shared<const Algebra>(Algebra::validate(F, table, names));

    // Delta on the generators, expanded to the monomial basis by multiplying
    // inside the tensor square.
    std::vector<Fq> dG(N * N, 0), dX(N * N, 0);
    dG[idx(1, 0) * N + idx(1, 0)] = F.one();
    dX[idx(0, 1) * N + idx(0, 0)] = F.one();
    dX[idx(1, 0) * N + idx(0, 1)] = F.one();
    FieldMatrix comul(F, N * N, N);
    std::vector<Fq> dgi(N * N, 0);
    dgi[idx(0, 0) * N + idx(0, 0)] = F.one();
    for (size_t i = 0; i < n; ++i) {
        std::vector<Fq> t = dgi;
        for (size_t j = 0; j < n; ++j) {
            for (size_t r = 0; r < N * N; ++r) comul.at(r, idx(i, j)) = t[r];
            t = tensor_product_mul(*alg, *alg, t, dX);
        }
        dgi = tensor_product_mul(*alg, *alg, dgi, dG);
    }

    FieldMatrix counit(F, 1, N);
    for (size_t i = 0; i < n; ++i) counit.at(0, idx(i, 0)) = F.one();

    // sigma reverses products: sigma(g^i x^j) = sigma(x)^j sigma(g^i) with
    // sigma(g) = g^{n-1} and sigma(x) = -g^{n-1} x.
    std::vector<Fq> sx(N, 0);
    sx[idx(n - 1, 1)] = F.neg(F.one());
    FieldMatrix antipode(F, N, N);
    std::vector<Fq> sxj(N, 0);
    sxj[idx(0, 0)] = F.one();
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) {
            std::vector<Fq> gi(N, 0);
            gi[idx((n - i) % n, 0)] = F.one();
            std::vector<Fq> s = alg->mul(sxj, gi);
            for (size_t r = 0; r < N; ++r) antipode.at(r, idx(i, j)) = s[r];
        }
        sxj = alg->mul(sx, sxj);
    }

    return HopfAlgebra::validate(std::move(alg), std::move(comul), std::move(counit),
                                 std::move(antipode));
}

}  // namespace hopfk
