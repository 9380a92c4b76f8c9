#include "hopfk/fqpoly.hpp"

#include <algorithm>
#include <sstream>

namespace hopfk::poly {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

bool is_zero(const Poly& f) { return f.empty(); }

Poly constant(Fq c) { return c == 0 ? Poly{} : Poly{c}; }

Poly monomial(size_t k, Fq c) {
    if (c == 0) return {};
    Poly f(k + 1, 0);
    f[k] = c;
    return f;
}

Poly add(const FiniteField& F, const Poly& f, const Poly& g) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
    trim(r);
    return r;
}

Poly sub(const FiniteField& F, const Poly& f, const Poly& g) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
    trim(r);
    return r;
}

Poly scale(const FiniteField& F, const Poly& f, Fq c) {
    if (c == 0) return {};
    Poly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = F.mul(f[i], c);
    return r;
}

Poly mul(const FiniteField& F, const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
    }
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const FiniteField& F, const Poly& f, const Poly& g) {
    internal_check(!g.empty(), "polynomial division by zero");
    if (f.size() < g.size()) return {Poly{}, f};
    Poly r = f;
    Poly q(f.size() - g.size() + 1, 0);
    Fq lead_inv = F.inv(g.back());
    for (size_t i = f.size(); i-- >= g.size();) {
        if (r[i] == 0) continue;
        Fq c = F.mul(r[i], lead_inv);
        q[i - g.size() + 1] = c;
        for (size_t j = 0; j < g.size(); ++j)
            r[i - g.size() + 1 + j] = F.sub(r[i - g.size() + 1 + j], F.mul(c, g[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
}

Poly rem(const FiniteField& F, const Poly& f, const Poly& g) { return divmod(F, f, g).second; }

Poly make_monic(const FiniteField& F, const Poly& f) {
    if (f.empty() || f.back() == F.one()) return f;
    return scale(F, f, F.inv(f.back()));
}

Poly gcd_monic(const FiniteField& F, Poly f, Poly g) {
    while (!g.empty()) {
        Poly r = rem(F, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(F, f);
}

ExtGcd ext_gcd(const FiniteField& F, const Poly& f, const Poly& h) {
    // Iterative Euclid carrying the Bezout rows.
    Poly r0 = f, r1 = h;
    Poly u0 = constant(F.one()), u1{};
    Poly v0{}, v1 = constant(F.one());
    while (!is_zero(r1)) {
        auto [q, r] = divmod(F, r0, r1);
        Poly u2 = sub(F, u0, mul(F, q, u1));
        Poly v2 = sub(F, v0, mul(F, q, v1));
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!is_zero(r0) && r0.back() != F.one()) {
        Fq s = F.inv(r0.back());
        r0 = scale(F, r0, s);
        u0 = scale(F, u0, s);
        v0 = scale(F, v0, s);
    }
    internal_check(add(F, mul(F, u0, f), mul(F, v0, h)) == r0, "ext_gcd bezout identity failed");
    return ExtGcd{r0, u0, v0};
}

Poly deriv(const FiniteField& F, const Poly& f) {
    if (f.size() < 2) return {};
    Poly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(F.from_int(i), f[i]);
    trim(r);
    return r;
}

Fq eval(const FiniteField& F, const Poly& f, Fq x) {
    Fq acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

Poly pow_mod(const FiniteField& F, Poly base, std::uint64_t e, const Poly& mod) {
    internal_check(deg(mod) >= 1, "pow_mod needs a modulus of positive degree");
    Poly r = constant(F.one());
    base = rem(F, base, mod);
    while (e > 0) {
        if (e & 1) r = rem(F, mul(F, r, base), mod);
        base = rem(F, mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

std::string to_string(const FiniteField& F, const Poly& f) {
    (void)F;
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || f[i] != 1) os << f[i];
        if (i >= 1) {
            if (f[i] != 1) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

bool poly_less(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// Distinct irreducible factors of a monic squarefree polynomial.
std::vector<Poly> berlekamp_squarefree(const FiniteField& F, const Poly& f) {
    int n = deg(f);
    internal_check(n >= 1 && f.back() == F.one(), "berlekamp expects a monic nonconstant input");
    if (n == 1) return {f};

    // Frobenius matrix: row i holds x^(i*q) mod f, so v |-> v^q is v*Q in
    // the row convention.
    Poly xq = pow_mod(F, monomial(1, F.one()), F.q(), f);
    FieldMatrix Q(F, n, n);
    Poly cur = constant(F.one());
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < cur.size(); ++j) Q.at(i, j) = cur[j];
        if (i + 1 < n) cur = rem(F, mul(F, cur, xq), f);
    }
    FieldMatrix B = Q.sub(FieldMatrix::identity(F, n));
    // Row kernel of B is the fixed algebra of Frobenius; its dimension
    // counts the irreducible factors.
    FieldMatrix K = B.transpose().kernel_basis();
    size_t k = K.rows();
    if (k == 1) return {f};

    std::vector<Poly> factors{f};
    for (size_t vi = 0; vi < k && factors.size() < k; ++vi) {
        Poly v(K.cols());
        for (size_t j = 0; j < K.cols(); ++j) v[j] = K.at(vi, j);
        trim(v);
        if (deg(v) < 1) continue;
        std::vector<Poly> next;
        for (const Poly& g : factors) {
            if (deg(g) == 1) { next.push_back(g); continue; }
            Poly piece = g;
            for (Fq c = 0; c < F.q() && deg(piece) >= 1; ++c) {
                if (!F.is_element(c)) continue;
                Poly d = gcd_monic(F, sub(F, v, constant(c)), piece);
                if (deg(d) >= 1 && deg(d) < deg(piece)) {
                    next.push_back(d);
                    piece = divmod(F, piece, d).first;
                }
            }
            if (deg(piece) >= 1) next.push_back(piece);
        }
        factors = std::move(next);
    }
    internal_check(factors.size() == k, "berlekamp split did not reach the factor count");
    return factors;
}

// f monic nonconstant with every root multiplicity divisible by p: take the
// p-th root coefficient-wise.
Poly pth_root(const FiniteField& F, const Poly& f) {
    std::uint32_t p = F.p();
    internal_check((f.size() - 1) % p == 0, "p-th root of a degree not divisible by p");
    Poly g((f.size() - 1) / p + 1, 0);
    std::uint64_t root_exp = F.q() / p;  // a^(q/p) is the p-th root in F_q
    for (size_t j = 0; j < g.size(); ++j) {
        for (size_t t = 1; t <= p - 1 && j * p + t < f.size(); ++t)
            internal_check(f[j * p + t] == 0, "polynomial is not a p-th power");
        g[j] = F.pow(f[j * p], root_exp);
    }
    return g;
}

void factor_into(const FiniteField& F, Poly f, int outer_mult,
                 std::vector<std::pair<Poly, int>>& out) {
    f = make_monic(F, f);
    if (deg(f) < 1) return;
    Poly df = deriv(F, f);
    Poly w = is_zero(df) ? constant(F.one()) : divmod(F, f, gcd_monic(F, f, df)).first;
    if (deg(w) < 1) {
        // Every multiplicity is divisible by p.
        factor_into(F, pth_root(F, f), outer_mult * static_cast<int>(F.p()), out);
        return;
    }
    Poly rest = f;
    for (const Poly& u : berlekamp_squarefree(F, w)) {
        int mult = 0;
        for (;;) {
            auto [q, r] = divmod(F, rest, u);
            if (!is_zero(r)) break;
            rest = q;
            ++mult;
        }
        internal_check(mult >= 1, "claimed factor does not divide");
        out.emplace_back(u, mult * outer_mult);
    }
    factor_into(F, rest, outer_mult, out);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const FiniteField& F, const Poly& f) {
    internal_check(deg(f) >= 1, "factor expects a nonconstant polynomial");
    std::vector<std::pair<Poly, int>> out;
    factor_into(F, f, 1, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    Poly check = constant(F.one());
    for (const auto& [u, m] : out) {
        internal_check(is_irreducible(F, u), "factor output not irreducible");
        for (int i = 0; i < m; ++i) check = mul(F, check, u);
    }
    internal_check(check == make_monic(F, f), "factorization product mismatch");
    return out;
}

bool is_irreducible(const FiniteField& F, const Poly& f) {
    int n = deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    Poly g = make_monic(F, f);
    if (deg(gcd_monic(F, g, deriv(F, g))) >= 1) return false;
    return berlekamp_squarefree(F, g).size() == 1;
}

Poly charpoly(const FieldMatrix& M) {
    internal_check(M.rows() == M.cols(), "charpoly of a non-square matrix");
    const FiniteField& F = M.field();
    size_t n = M.rows();
    if (n == 0) return constant(F.one());
    FieldMatrix H = M;

    // Similarity reduction to upper Hessenberg form.
    for (size_t j = 0; j + 2 < n; ++j) {
        size_t piv = 0;
        for (size_t i = j + 1; i < n; ++i)
            if (H.at(i, j) != 0) { piv = i; break; }
        if (piv == 0) continue;
        if (piv != j + 1) {
            for (size_t c = 0; c < n; ++c) std::swap(H.at(j + 1, c), H.at(piv, c));
            for (size_t r = 0; r < n; ++r) std::swap(H.at(r, j + 1), H.at(r, piv));
        }
        Fq pinv = F.inv(H.at(j + 1, j));
        for (size_t i = j + 2; i < n; ++i) {
            Fq factor = F.mul(H.at(i, j), pinv);
            if (factor == 0) continue;
            for (size_t c = 0; c < n; ++c)
                H.at(i, c) = F.sub(H.at(i, c), F.mul(factor, H.at(j + 1, c)));
            for (size_t r = 0; r < n; ++r)
                H.at(r, j + 1) = F.add(H.at(r, j + 1), F.mul(factor, H.at(r, i)));
        }
    }

    // Leading-minor recurrence for Hessenberg characteristic polynomials.
    std::vector<Poly> p(n + 1);
    p[0] = constant(F.one());
    for (size_t m = 1; m <= n; ++m) {
        Poly term = mul(M.field(), sub(F, monomial(1, F.one()), constant(H.at(m - 1, m - 1))), p[m - 1]);
        Fq subprod = F.one();
        for (size_t i = 1; i < m; ++i) {
            subprod = F.mul(subprod, H.at(m - i, m - i - 1));
            if (subprod == 0) break;
            Fq coef = F.mul(H.at(m - 1 - i, m - 1), subprod);
            term = sub(F, term, scale(F, p[m - 1 - i], coef));
        }
        p[m] = std::move(term);
    }
    internal_check(deg(p[n]) == static_cast<int>(n) && p[n].back() == F.one(),
                   "charpoly is not monic of the right degree");
    return p[n];
}

Poly minpoly(const FieldMatrix& M) {
    internal_check(M.rows() == M.cols(), "minpoly of a non-square matrix");
    const FiniteField& F = M.field();
    size_t n = M.rows();
    if (n == 0) return monomial(1, F.one());

    EchelonBasis seen(F, n * n);
    std::vector<std::vector<Fq>> flats;
    FieldMatrix power = FieldMatrix::identity(F, n);
    for (size_t k = 0; k <= n; ++k) {
        std::vector<Fq> flat(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) flat[i * n + j] = power.at(i, j);
        if (!seen.insert(flat)) {
            // First dependence: M^k = sum c_i M^i gives the minimal polynomial.
            FieldMatrix stack(F, flats.size(), n * n);
            for (size_t r = 0; r < flats.size(); ++r) stack.set_row(r, flats[r]);
            auto sol = stack.transpose().solve(flat);
            internal_check(sol.has_value(), "minpoly dependence has no solution");
            Poly m = monomial(k, F.one());
            for (size_t i = 0; i < k; ++i) m = sub(F, m, monomial(i, (*sol)[i]));
            internal_check(eval_at_matrix(m, M).is_zero(), "minpoly does not annihilate");
            return m;
        }
        flats.push_back(std::move(flat));
        power = power.mul(M);
    }
    throw InternalError("matrix powers stayed independent past the dimension");
}

FieldMatrix eval_at_matrix(const Poly& f, const FieldMatrix& M) {
    internal_check(M.rows() == M.cols(), "polynomial evaluation needs a square matrix");
    const FiniteField& F = M.field();
    FieldMatrix acc(F, M.rows(), M.rows());
    for (size_t i = f.size(); i-- > 0;) {
        acc = acc.mul(M);
        if (f[i] != 0)
            acc = acc.add(FieldMatrix::identity(F, M.rows()).scaled(f[i]));
    }
    return acc;
}

}  // namespace hopfk::poly
