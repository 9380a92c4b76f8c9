#pragma once

#include <cstdint>
#include <vector>

#include "hopfk/errors.hpp"

namespace hopfk::la {

/* Element of F_{p^e}, stored as the reduced polynomial residue
 * c_0 + c_1 t + ... + c_{e-1} t^{e-1} packed base p: value = sum c_i p^i.
 * The zero element is 0 and the unit is 1 in every field.
 */
using Fq = std::uint32_t;

class FiniteField {
public:
    // modulus: e+1 coefficients of a monic irreducible, low degree first.
    // Irreducibility is established at construction by exhaustive search
    // for monic factors of degree <= e/2.
    FiniteField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    static FiniteField prime_field(std::uint32_t p);
    // First monic irreducible of degree e in lexicographic coefficient order.
    static FiniteField with_default_modulus(std::uint32_t p, std::uint32_t e);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fq zero() const { return 0; }
    Fq one() const { return 1; }

    bool is_element(Fq a) const { return a < q_; }

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;  // throws MathError("DivisionByZero") on 0
    Fq pow(Fq a, std::uint64_t n) const;

    // Residue of an arbitrary integer in the prime subfield.
    Fq from_int(long long v) const;

    // Digit views: coefficient vectors of length e, low degree first.
    std::vector<std::uint32_t> coeffs(Fq a) const;
    Fq from_coeffs(const std::vector<std::uint32_t>& c) const;

    bool operator==(const FiniteField& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FiniteField& o) const { return !(*this == o); }

private:
    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;

    void check_irreducible() const;
};

}  // namespace hopfk::la
