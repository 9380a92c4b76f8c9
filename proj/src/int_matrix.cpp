#include "hopfk/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hopfk::la {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        internal_check(rows[i].size() == c, "ragged integer matrix literal");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    internal_check(cols_ == o.rows_, "integer matrix shape mismatch in mul");
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Int IntMatrix::det_bareiss() const {
    internal_check(rows_ == cols_, "determinant of non-square matrix");
    size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix w = *this;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            size_t swap = k;
            for (size_t i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { swap = i; break; }
            if (swap == k) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num / prev;  // exact by the Bareiss identity
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

namespace {

void row_axpy(IntMatrix& m, size_t dst, size_t src, const Int& q) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_axpy(IntMatrix& m, size_t dst, size_t src, const Int& q) {
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

void row_swap(IntMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void col_swap(IntMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void row_negate(IntMatrix& m, size_t r) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SnfResult snf(const IntMatrix& M) {
    size_t nr = M.rows(), nc = M.cols();
    IntMatrix S = M;
    IntMatrix U = IntMatrix::identity(nr);
    IntMatrix V = IntMatrix::identity(nc);

    size_t t = 0;
    while (t < nr && t < nc) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        size_t pi = t, pj = t;
        for (size_t i = t; i < nr; ++i)
            for (size_t j = t; j < nc; ++j) {
                const Int& x = S.at(i, j);
                if (x == 0) continue;
                if (!found || abs_int(x) < abs_int(S.at(pi, pj))) { pi = i; pj = j; found = true; }
            }
        if (!found) break;
        row_swap(S, t, pi); row_swap(U, t, pi);
        col_swap(S, t, pj); col_swap(V, t, pj);

        for (;;) {
            bool dirty = false;
            for (size_t i = t + 1; i < nr; ++i) {
                if (S.at(i, t) == 0) continue;
                Int q = S.at(i, t) / S.at(t, t);
                row_axpy(S, i, t, q); row_axpy(U, i, t, q);
                if (S.at(i, t) != 0) {
                    // Truncated division left a remainder strictly smaller
                    // than the pivot; promote it and go again.
                    row_swap(S, t, i); row_swap(U, t, i);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < nc; ++j) {
                if (S.at(t, j) == 0) continue;
                Int q = S.at(t, j) / S.at(t, t);
                col_axpy(S, j, t, q); col_axpy(V, j, t, q);
                if (S.at(t, j) != 0) {
                    col_swap(S, t, j); col_swap(V, t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Pivot now alone in its row and column.  Pull in any entry of
            // the trailing block it fails to divide and restart.
            bool fixed = true;
            for (size_t i = t + 1; i < nr && fixed; ++i)
                for (size_t j = t + 1; j < nc && fixed; ++j)
                    if (S.at(i, j) % S.at(t, t) != 0) {
                        row_axpy(S, t, i, Int(-1)); row_axpy(U, t, i, Int(-1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        ++t;
    }

    for (size_t i = 0; i < t; ++i)
        if (S.at(i, i) < 0) { row_negate(S, i); row_negate(U, i); }

    SnfResult res{S, U, V, {}};
    for (size_t i = 0; i < t; ++i) res.invariant_factors.push_back(S.at(i, i));

    internal_check(U.mul(M).mul(V) == S, "snf factorization check failed");
    internal_check(abs_int(U.det_bareiss()) == 1 && abs_int(V.det_bareiss()) == 1,
                   "snf transform not unimodular");
    for (size_t i = 0; i + 1 < res.invariant_factors.size(); ++i)
        internal_check(res.invariant_factors[i + 1] % res.invariant_factors[i] == 0,
                       "snf divisibility chain broken");
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j)
            internal_check((S.at(i, j) != 0) == (i == j && i < t), "snf result not diagonal");
    return res;
}

HnfResult hnf_rows(const IntMatrix& M) {
    size_t nr = M.rows(), nc = M.cols();
    IntMatrix H = M;
    IntMatrix U = IntMatrix::identity(nr);
    size_t r = 0;
    std::vector<size_t> pivots;

    for (size_t c = 0; c < nc && r < nr; ++c) {
        // Euclid on the column below r until one nonzero entry survives.
        for (;;) {
            size_t best = nr;
            for (size_t i = r; i < nr; ++i)
                if (H.at(i, c) != 0 && (best == nr || abs_int(H.at(i, c)) < abs_int(H.at(best, c))))
                    best = i;
            if (best == nr) break;
            row_swap(H, r, best); row_swap(U, r, best);
            bool cleared = true;
            for (size_t i = r + 1; i < nr; ++i) {
                if (H.at(i, c) == 0) continue;
                Int q = H.at(i, c) / H.at(r, c);
                row_axpy(H, i, r, q); row_axpy(U, i, r, q);
                if (H.at(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (H.at(r, c) == 0) continue;
        if (H.at(r, c) < 0) { row_negate(H, r); row_negate(U, r); }
        for (size_t i = 0; i < r; ++i) {
            // Canonical form: entries above the pivot land in [0, pivot).
            Int q = H.at(i, c) / H.at(r, c);
            if (H.at(i, c) - q * H.at(r, c) < 0) q -= 1;
            if (q != 0) { row_axpy(H, i, r, q); row_axpy(U, i, r, q); }
        }
        pivots.push_back(c);
        ++r;
    }

    internal_check(U.mul(M) == H, "hnf factorization check failed");
    internal_check(abs_int(U.det_bareiss()) == 1, "hnf transform not unimodular");
    return HnfResult{H, U, r, pivots};
}

std::optional<MinMultiple> lattice_min_multiple(const IntMatrix& rows, const std::vector<Int>& v) {
    internal_check(v.size() == rows.cols(), "lattice query dimension mismatch");
    HnfResult h = hnf_rows(rows);

    // Solve x * H_top = v over the rationals by forward substitution down
    // the pivot staircase.
    std::vector<Rational> residual(v.size());
    for (size_t j = 0; j < v.size(); ++j) residual[j] = Rational(v[j]);
    std::vector<Rational> x(h.rank, Rational(0));
    for (size_t i = 0; i < h.rank; ++i) {
        size_t p = h.pivot_cols[i];
        x[i] = residual[p] / Rational(h.H.at(i, p));
        if (x[i] == 0) continue;
        for (size_t j = 0; j < v.size(); ++j) residual[j] -= x[i] * Rational(h.H.at(i, j));
    }
    for (const auto& re : residual)
        if (re != 0) return std::nullopt;  // v outside the rational row span

    Int m = 1;
    for (const auto& xi : x) m = lcm(m, denominator(xi));

    // a = m * x * U_top pulls the coefficients back to the original rows.
    std::vector<Int> a(rows.rows(), 0);
    for (size_t i = 0; i < h.rank; ++i) {
        Rational scaled = Rational(m) * x[i];
        internal_check(denominator(scaled) == 1, "lattice coefficient not integral");
        Int c = numerator(scaled);
        if (c == 0) continue;
        for (size_t k = 0; k < rows.rows(); ++k) a[k] += c * h.U.at(i, k);
    }

    for (size_t j = 0; j < v.size(); ++j) {
        Int s = 0;
        for (size_t k = 0; k < rows.rows(); ++k) s += a[k] * rows.at(k, j);
        internal_check(s == m * v[j], "lattice combination check failed");
    }
    return MinMultiple{m, a};
}

}  // namespace hopfk::la
