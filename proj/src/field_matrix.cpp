#include "hopfk/field_matrix.hpp"

#include <algorithm>

#include "hopfk/errors.hpp"

namespace hopfk::la {

FieldMatrix FieldMatrix::identity(const FiniteField& F, size_t n) {
    FieldMatrix m(F, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
}

std::vector<Fq> FieldMatrix::row(size_t r) const {
    return std::vector<Fq>(a_.begin() + static_cast<long>(r * cols_),
                           a_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<Fq> FieldMatrix::col(size_t c) const {
    std::vector<Fq> out(rows_);
    for (size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

void FieldMatrix::set_row(size_t r, const std::vector<Fq>& v) {
    internal_check(v.size() == cols_, "set_row width mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + static_cast<long>(r * cols_));
}

FieldMatrix FieldMatrix::mul(const FieldMatrix& o) const {
    internal_check(cols_ == o.rows_ && F_ == o.F_, "matrix product shape mismatch");
    FieldMatrix out(F_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            Fq v = at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                Fq prod = F_.mul(v, o.at(k, j));
                out.at(i, j) = F_.add(out.at(i, j), prod);
            }
        }
    }
    return out;
}

FieldMatrix FieldMatrix::add(const FieldMatrix& o) const {
    internal_check(rows_ == o.rows_ && cols_ == o.cols_ && F_ == o.F_, "matrix sum shape mismatch");
    FieldMatrix out(F_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = F_.add(a_[i], o.a_[i]);
    return out;
}

FieldMatrix FieldMatrix::sub(const FieldMatrix& o) const {
    internal_check(rows_ == o.rows_ && cols_ == o.cols_ && F_ == o.F_, "matrix diff shape mismatch");
    FieldMatrix out(F_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = F_.sub(a_[i], o.a_[i]);
    return out;
}

FieldMatrix FieldMatrix::scaled(Fq c) const {
    FieldMatrix out(F_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = F_.mul(c, a_[i]);
    return out;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix out(F_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

FieldMatrix FieldMatrix::kronecker(const FieldMatrix& o) const {
    internal_check(F_ == o.F_, "kronecker field mismatch");
    FieldMatrix out(F_, rows_ * o.rows_, cols_ * o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            Fq v = at(i, j);
            if (v == 0) continue;
            for (size_t k = 0; k < o.rows_; ++k)
                for (size_t l = 0; l < o.cols_; ++l)
                    out.at(i * o.rows_ + k, j * o.cols_ + l) = F_.mul(v, o.at(k, l));
        }
    return out;
}

bool FieldMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Fq v) { return v == 0; });
}

bool FieldMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? F_.one() : F_.zero())) return false;
    return true;
}

Rref FieldMatrix::rref() const {

    FieldMatrix m = *this;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = r;
        while (sel < rows_ && m.at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != r)
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
        Fq piv_inv = F_.inv(m.at(r, c));
        for (size_t j = c; j < cols_; ++j) m.at(r, j) = F_.mul(piv_inv, m.at(r, j));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            Fq f = m.at(i, c);
            if (f == 0) continue;
            for (size_t j = c; j < cols_; ++j)
                m.at(i, j) = F_.sub(m.at(i, j), F_.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return Rref{std::move(m), std::move(pivots), r};
}

size_t FieldMatrix::rank() const { return rref().rank; }

FieldMatrix FieldMatrix::kernel_basis() const {
    Rref rr = rref();
    std::vector<char> is_pivot(cols_, 0);
    for (size_t c : rr.pivot_cols) is_pivot[c] = 1;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FieldMatrix out(F_, free_cols.size(), cols_);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        out.at(k, fc) = F_.one();
        for (size_t pi = 0; pi < rr.pivot_cols.size(); ++pi)
            out.at(k, rr.pivot_cols[pi]) = F_.neg(rr.reduced.at(pi, fc));
    }
    return out;
}

std::optional<std::vector<Fq>> FieldMatrix::solve(const std::vector<Fq>& b) const {
    internal_check(b.size() == rows_, "solve rhs length mismatch");
    // Augment, reduce, read off one solution with free variables at zero.
    FieldMatrix aug(F_, rows_, cols_ + 1);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[r];
    }
    Rref rr = aug.rref();
    std::vector<Fq> x(cols_, 0);
    for (size_t pi = 0; pi < rr.pivot_cols.size(); ++pi) {
        if (rr.pivot_cols[pi] == cols_) return std::nullopt;  // last column is a pivot
        x[rr.pivot_cols[pi]] = rr.reduced.at(pi, cols_);
    }
    std::vector<Fq> check = apply_col(x);
    internal_check(check == b, "solve substitution check failed");
    return x;
}

std::optional<FieldMatrix> FieldMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    FieldMatrix aug(F_, rows_, 2 * cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = F_.one();
    }
    Rref rr = aug.rref();
    if (rr.rank != rows_) return std::nullopt;
    for (size_t i = 0; i < rr.rank; ++i)
        if (rr.pivot_cols[i] != i) return std::nullopt;
    FieldMatrix out(F_, rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(r, c) = rr.reduced.at(r, cols_ + c);
    return out;
}

std::vector<Fq> FieldMatrix::apply_row(const std::vector<Fq>& v) const {
    internal_check(v.size() == rows_, "apply_row length mismatch");
    std::vector<Fq> out(cols_, 0);
    for (size_t r = 0; r < rows_; ++r) {
        Fq c = v[r];
        if (c == 0) continue;
        for (size_t j = 0; j < cols_; ++j)
            out[j] = F_.add(out[j], F_.mul(c, at(r, j)));
    }
    return out;
}

std::vector<Fq> FieldMatrix::apply_col(const std::vector<Fq>& x) const {
    internal_check(x.size() == cols_, "apply_col length mismatch");
    std::vector<Fq> out(rows_, 0);
    for (size_t r = 0; r < rows_; ++r) {
        Fq acc = 0;
        for (size_t c = 0; c < cols_; ++c)
            if (x[c] != 0) acc = F_.add(acc, F_.mul(at(r, c), x[c]));
        out[r] = acc;
    }
    return out;
}

FieldMatrix FieldMatrix::from_rows(const FiniteField& F, size_t cols,
                                   const std::vector<std::vector<Fq>>& rows) {
    FieldMatrix out(F, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) out.set_row(r, rows[r]);
    return out;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& below) const {
    internal_check(cols_ == below.cols_ && F_ == below.F_, "vstack width mismatch");
    FieldMatrix out(F_, rows_ + below.rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (size_t r = 0; r < below.rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(rows_ + r, c) = below.at(r, c);
    return out;
}

std::vector<Fq> vec_add(const FiniteField& F, const std::vector<Fq>& a, const std::vector<Fq>& b) {
    internal_check(a.size() == b.size(), "vector sum length mismatch");
    std::vector<Fq> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = F.add(a[i], b[i]);
    return out;
}

std::vector<Fq> vec_sub(const FiniteField& F, const std::vector<Fq>& a, const std::vector<Fq>& b) {
    internal_check(a.size() == b.size(), "vector diff length mismatch");
    std::vector<Fq> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = F.sub(a[i], b[i]);
    return out;
}

std::vector<Fq> vec_scale(const FiniteField& F, Fq c, const std::vector<Fq>& a) {
    std::vector<Fq> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = F.mul(c, a[i]);
    return out;
}

bool vec_is_zero(const std::vector<Fq>& a) {
    return std::all_of(a.begin(), a.end(), [](Fq v) { return v == 0; });
}

std::vector<Fq> EchelonBasis::reduce(std::vector<Fq> v) const {
    internal_check(v.size() == width_, "reduce width mismatch");
    for (size_t i = 0; i < rows_.size(); ++i) {
        Fq c = v[pivots_[i]];
        if (c == 0) continue;
        // rows_[i] has pivot value 1, so subtract c * row.
        for (size_t j = 0; j < width_; ++j)
            v[j] = F_.sub(v[j], F_.mul(c, rows_[i][j]));
    }
    return v;
}

bool EchelonBasis::insert(std::vector<Fq> v) {
    v = reduce(std::move(v));
    size_t piv = width_;
    for (size_t j = 0; j < width_; ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv == width_) return false;
    Fq inv = F_.inv(v[piv]);
    for (size_t j = 0; j < width_; ++j) v[j] = F_.mul(inv, v[j]);
    // Back-reduce existing rows to keep the representation canonical.
    for (size_t i = 0; i < rows_.size(); ++i) {
        Fq c = rows_[i][piv];
        if (c == 0) continue;
        for (size_t j = 0; j < width_; ++j)
            rows_[i][j] = F_.sub(rows_[i][j], F_.mul(c, v[j]));
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
    return true;
}

FieldMatrix EchelonBasis::as_matrix() const { return FieldMatrix::from_rows(F_, width_, rows_); }

std::optional<std::vector<Fq>> EchelonBasis::coordinates(const std::vector<Fq>& v) const {
    std::vector<Fq> coords(rows_.size(), 0);
    std::vector<Fq> residual = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        Fq c = residual[pivots_[i]];
        coords[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < width_; ++j)
            residual[j] = F_.sub(residual[j], F_.mul(c, rows_[i][j]));
    }
    if (!vec_is_zero(residual)) return std::nullopt;
    return coords;
}

std::vector<size_t> EchelonBasis::non_pivots() const {
    std::vector<char> is_pivot(width_, 0);
    for (size_t p : pivots_) is_pivot[p] = 1;
    std::vector<size_t> out;
    for (size_t c = 0; c < width_; ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

}  // namespace hopfk::la
