#include "hopfk/algebra.hpp"

#include <sstream>

#include "hopfk/errors.hpp"

namespace hopfk {

Algebra Algebra::validate(const FiniteField& F, const FieldMatrix& table,
                          std::vector<std::string> basis_names) {
    size_t n = table.cols();
    internal_check(n >= 1 && table.rows() == n * n, "structure constant table has wrong shape");
    if (basis_names.empty())
        for (size_t i = 0; i < n; ++i) basis_names.push_back("a" + std::to_string(i));
    internal_check(basis_names.size() == n, "basis name count mismatch");

    // Unit first: solve u*a_j = a_j and a_j*u = a_j as one linear system in u.
    FieldMatrix sys(F, 2 * n * n, n);
    std::vector<Fq> rhs(2 * n * n, 0);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            for (size_t i = 0; i < n; ++i) {
                sys.at(j * n + k, i) = table.at(i * n + j, k);
                sys.at(n * n + j * n + k, i) = table.at(j * n + i, k);
            }
            rhs[j * n + k] = (j == k) ? F.one() : 0;
            rhs[n * n + j * n + k] = (j == k) ? F.one() : 0;
        }
    auto u = sys.solve(rhs);
    if (!u) throw MathError("NoUnit", "structure constants admit no two-sided unit");

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Fq> ij = table.row(i * n + j);
            for (size_t k = 0; k < n; ++k) {
                std::vector<Fq> jk = table.row(j * n + k);
                std::vector<Fq> lhs(n, 0), rhsv(n, 0);
                for (size_t l = 0; l < n; ++l) {
                    if (ij[l] != 0)
                        for (size_t m = 0; m < n; ++m)
                            lhs[m] = F.add(lhs[m], F.mul(ij[l], table.at(l * n + k, m)));
                    if (jk[l] != 0)
                        for (size_t m = 0; m < n; ++m)
                            rhsv[m] = F.add(rhsv[m], F.mul(jk[l], table.at(i * n + l, m)));
                }
                if (lhs != rhsv) {
                    std::ostringstream os;
                    os << "associativity fails on basis triple (" << i << ", " << j << ", " << k
                       << ")";
                    throw MathError("NotAssociative", os.str());
                }
            }
        }
    return Algebra(table, n, *u, std::move(basis_names));
}

std::vector<Fq> Algebra::mul(const std::vector<Fq>& a, const std::vector<Fq>& b) const {
    internal_check(a.size() == dim_ && b.size() == dim_, "element length mismatch in mul");
    const FiniteField& F = field();
    std::vector<Fq> r(dim_, 0);
    for (size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            Fq c = F.mul(a[i], b[j]);
            for (size_t k = 0; k < dim_; ++k)
                r[k] = F.add(r[k], F.mul(c, table_.at(i * dim_ + j, k)));
        }
    }
    return r;
}

FieldMatrix Algebra::rmul(const std::vector<Fq>& a) const {
    internal_check(a.size() == dim_, "element length mismatch in rmul");
    const FiniteField& F = field();
    FieldMatrix R(F, dim_, dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            if (a[j] == 0) continue;
            for (size_t k = 0; k < dim_; ++k)
                R.at(i, k) = F.add(R.at(i, k), F.mul(a[j], table_.at(i * dim_ + j, k)));
        }
    return R;
}

FieldMatrix Algebra::lmul(const std::vector<Fq>& a) const {
    internal_check(a.size() == dim_, "element length mismatch in lmul");
    const FiniteField& F = field();
    FieldMatrix L(F, dim_, dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            if (a[j] == 0) continue;
            for (size_t k = 0; k < dim_; ++k)
                L.at(i, k) = F.add(L.at(i, k), F.mul(a[j], table_.at(j * dim_ + i, k)));
        }
    return L;
}

FieldMatrix Algebra::rmul_basis(size_t i) const {
    std::vector<Fq> a(dim_, 0);
    a[i] = field().one();
    return rmul(a);
}

FieldMatrix Algebra::lmul_basis(size_t i) const {
    std::vector<Fq> a(dim_, 0);
    a[i] = field().one();
    return lmul(a);
}

std::optional<std::vector<Fq>> Algebra::element_inverse(const std::vector<Fq>& a) const {
    // x with x*a = 1; in a finite-dimensional unital algebra a one-sided
    // inverse is two-sided, but the other side is cheap to confirm.
    auto x = rmul(a).transpose().solve(unit_);
    if (!x) return std::nullopt;
    internal_check(mul(a, *x) == unit_, "one-sided inverse failed on the other side");
    return x;
}

std::vector<std::vector<Fq>> Algebra::generators() const {
    const FiniteField& F = field();
    EchelonBasis span(F, dim_);
    span.insert(unit_);
    std::vector<std::vector<Fq>> gens;
    for (size_t i = 0; i < dim_ && span.dim() < dim_; ++i) {
        std::vector<Fq> e(dim_, 0);
        e[i] = F.one();
        if (!span.insert(e)) continue;
        gens.push_back(e);
        // Close the span under products until it stabilizes.
        bool grew = true;
        while (grew && span.dim() < dim_) {
            grew = false;
            FieldMatrix rows = span.as_matrix();
            for (size_t r = 0; r < rows.rows(); ++r)
                for (size_t s = 0; s < rows.rows(); ++s)
                    if (span.insert(mul(rows.row(r), rows.row(s)))) grew = true;
        }
    }
    internal_check(span.dim() == dim_, "generator search did not span the algebra");
    return gens;
}

bool Algebra::operator==(const Algebra& o) const {
    return field() == o.field() && dim_ == o.dim_ && table_ == o.table_;
}

Subalgebra subalgebra_on_span(const Algebra& A, const FieldMatrix& rows) {
    const FiniteField& F = A.field();
    size_t n = A.dim();
    internal_check(rows.cols() == n, "subalgebra span length mismatch");
    EchelonBasis span(F, n);
    for (size_t r = 0; r < rows.rows(); ++r) span.insert(rows.row(r));
    FieldMatrix basis = span.as_matrix();
    size_t m = basis.rows();
    internal_check(m >= 1, "empty subalgebra span");

    FieldMatrix table(F, m * m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            std::vector<Fq> prod = A.mul(basis.row(i), basis.row(j));
            auto coords = span.coordinates(prod);
            if (!coords) throw MathError("NotClosed", "span is not closed under multiplication");
            table.set_row(i * m + j, *coords);
        }
    std::vector<std::string> names;
    for (size_t k = 0; k < m; ++k) names.push_back("s" + std::to_string(k));
    return Subalgebra{Algebra::validate(F, table, std::move(names)), basis};
}

QuotientAlgebra quotient_algebra(const Algebra& A, const FieldMatrix& ideal_rows) {
    const FiniteField& F = A.field();
    size_t n = A.dim();
    internal_check(ideal_rows.cols() == n, "ideal basis length mismatch");

    EchelonBasis ideal(F, n);
    for (size_t r = 0; r < ideal_rows.rows(); ++r) ideal.insert(ideal_rows.row(r));
    for (size_t r = 0; r < ideal.dim(); ++r) {
        std::vector<Fq> v = ideal.as_matrix().row(r);
        for (size_t i = 0; i < n; ++i) {
            std::vector<Fq> e(n, 0);
            e[i] = F.one();
            if (!ideal.contains(A.mul(v, e)) || !ideal.contains(A.mul(e, v)))
                throw MathError("NotAnIdeal", "span is not a two-sided ideal");
        }
    }

    std::vector<size_t> comp = ideal.non_pivots();
    size_t m = comp.size();
    internal_check(m >= 1, "quotient by the whole algebra");

    // proj reduces mod the ideal and reads off the complement coordinates;
    // reduction zeroes every pivot coordinate, so nothing is lost.
    FieldMatrix proj(F, n, m);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Fq> e(n, 0);
        e[i] = F.one();
        std::vector<Fq> w = ideal.reduce(e);
        for (size_t k = 0; k < m; ++k) proj.at(i, k) = w[comp[k]];
    }
    FieldMatrix section(F, m, n);
    for (size_t k = 0; k < m; ++k) section.at(k, comp[k]) = F.one();

    FieldMatrix table(F, m * m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            std::vector<Fq> prod = A.mul(section.row(i), section.row(j));
            table.set_row(i * m + j, proj.apply_row(prod));
        }

    std::vector<std::string> names;
    for (size_t k = 0; k < m; ++k) names.push_back("q" + std::to_string(comp[k]));
    QuotientAlgebra out{Algebra::validate(F, table, std::move(names)), proj, section};

    // The projection must be an algebra map sending 1 to 1.
    internal_check(out.proj.apply_row(A.unit()) == out.quotient.unit(),
                   "quotient projection does not preserve the unit");
    return out;
}

}  // namespace hopfk
