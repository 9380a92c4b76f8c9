#include "hopfk/finite_field.hpp"

#include <array>
#include <string>

namespace hopfk::la {

namespace {

constexpr std::uint32_t kMaxExt = 16;  // digits buffers below are sized for this

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense coefficient arithmetic over F_p for the modulus checks.  Vectors are
// low-degree-first and may carry trailing zeros.
using PolyP = std::vector<std::uint32_t>;

int degree(const PolyP& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

PolyP mul_mod_p(const PolyP& f, const PolyP& g, std::uint32_t p) {
    if (f.empty() || g.empty()) return {};
    PolyP out(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j)
            out[i + j] = (out[i + j] + f[i] * g[j]) % p;
    }
    return out;
}

// Remainder of f by monic g.
PolyP rem_mod_p(PolyP f, const PolyP& g, std::uint32_t p) {
    int dg = degree(g);
    internal_check(dg >= 0 && g[static_cast<size_t>(dg)] == 1, "rem_mod_p needs monic divisor");
    for (int df = degree(f); df >= dg; df = degree(f)) {
        std::uint32_t c = f[static_cast<size_t>(df)];
        int shift = df - dg;
        for (int i = 0; i <= dg; ++i) {
            std::uint32_t sub = (c * g[static_cast<size_t>(i)]) % p;
            std::uint32_t& slot = f[static_cast<size_t>(i + shift)];
            slot = (slot + p - sub) % p;
        }
    }
    return f;
}

// Enumerate monic polynomials of degree d over F_p in lexicographic
// coefficient order and report whether any divides f.
bool has_monic_factor_of_degree(const PolyP& f, std::uint32_t d, std::uint32_t p) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PolyP g(d + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < d; ++i) {
            g[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        g[d] = 1;
        if (degree(rem_mod_p(f, g, p)) < 0) return true;
    }
    return false;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw MathError("NotPrime", "field characteristic " + std::to_string(p) + " is not prime");
    if (e == 0 || e > kMaxExt) throw MathError("BadExtensionDegree", "extension degree must be in [1, 16]");
    q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > (1ULL << 20))
            throw MathError("FieldTooLarge", "field order exceeds the supported bound");
    }
    if (e_ == 1) {
        // Degree-1 modulus is implied; accept either empty or an explicit monic linear one.
        if (!modulus_.empty()) {
            if (modulus_.size() != 2 || modulus_[1] != 1 || modulus_[0] >= p_)
                throw MathError("BadModulus", "degree-1 modulus must be monic linear over F_p");
        } else {
            modulus_ = {0, 1};
        }
        return;
    }
    if (modulus_.size() != e_ + 1)
        throw MathError("BadModulus", "modulus needs exactly e+1 coefficients");
    for (std::uint32_t c : modulus_)
        if (c >= p_) throw MathError("BadModulus", "modulus coefficient out of range");
    if (modulus_[e_] != 1) throw MathError("BadModulus", "modulus must be monic");
    check_irreducible();
}

void FiniteField::check_irreducible() const {
    if (modulus_[0] == 0)
        throw MathError("ReducibleModulus", "modulus has root 0");
    for (std::uint32_t d = 1; d <= e_ / 2; ++d) {
        if (has_monic_factor_of_degree(modulus_, d, p_))
            throw MathError("ReducibleModulus",
                            "modulus has a factor of degree " + std::to_string(d));
    }
}

FiniteField FiniteField::prime_field(std::uint32_t p) { return FiniteField(p, 1, {}); }

FiniteField FiniteField::with_default_modulus(std::uint32_t p, std::uint32_t e) {
    if (e == 1) return prime_field(p);
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> g(e + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < e; ++i) {
            g[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        g[e] = 1;
        try {
            return FiniteField(p, e, g);
        } catch (const MathError&) {
            continue;
        }
    }
    throw InternalError("no irreducible of requested degree found");
}

Fq FiniteField::add(Fq a, Fq b) const {
    if (e_ == 1) {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Fq out = 0;
    std::uint32_t mul = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * mul;
        mul *= p_;
    }
    return out;
}

Fq FiniteField::neg(Fq a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    Fq out = 0;
    std::uint32_t mul = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = a % p_;
        a /= p_;
        out += (d == 0 ? 0 : p_ - d) * mul;
        mul *= p_;
    }
    return out;
}

Fq FiniteField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FiniteField::mul(Fq a, Fq b) const {
    if (e_ == 1) return (a * b) % p_;
    std::array<std::uint32_t, kMaxExt> da{}, db{};
    std::array<std::uint32_t, 2 * kMaxExt> prod{};
    for (std::uint32_t i = 0; i < e_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    // Reduce by the monic modulus, high degree first.
    for (int d = static_cast<int>(2 * e_ - 2); d >= static_cast<int>(e_); --d) {
        std::uint32_t c = prod[static_cast<size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<size_t>(d)] = 0;
        int shift = d - static_cast<int>(e_);
        for (std::uint32_t i = 0; i < e_; ++i) {
            std::uint32_t sub = (c * modulus_[i]) % p_;
            std::uint32_t& slot = prod[static_cast<size_t>(shift) + i];
            slot = (slot + p_ - sub) % p_;
        }
    }
    Fq out = 0;
    std::uint32_t mul = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += prod[i] * mul;
        mul *= p_;
    }
    return out;
}

Fq FiniteField::pow(Fq a, std::uint64_t n) const {
    Fq out = one();
    Fq base = a;
    while (n > 0) {
        if (n & 1) out = mul(out, base);
        base = mul(base, base);
        n >>= 1;
    }
    return out;
}

Fq FiniteField::inv(Fq a) const {
    if (a == 0) throw MathError("DivisionByZero", "inverse of zero field element");
    return pow(a, q_ - 2);
}

Fq FiniteField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Fq>(r);
}

std::vector<std::uint32_t> FiniteField::coeffs(Fq a) const {
    std::vector<std::uint32_t> out(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

Fq FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != e_) throw MathError("BadElement", "coefficient tuple has wrong length");
    Fq out = 0;
    std::uint32_t mul = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (c[i] >= p_) throw MathError("BadElement", "coefficient out of range");
        out += c[i] * mul;
        mul *= p_;
    }
    return out;
}

}  // namespace hopfk::la
