#pragma once

#include <cstdint>
#include <string_view>

namespace hopfk {

/* Deterministic splitmix64 stream.  All randomized routines take one of
 * these explicitly; a run is reproduced exactly by reusing the root seed.
 * Sub-streams are derived from (seed, label) so that unrelated call sites
 * do not perturb each other's draws.
 */
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling keeps the draw unbiased and portable.
        std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    Prng derive(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a offset basis
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return Prng(state_ ^ h);
    }

private:
    std::uint64_t state_;
};

}  // namespace hopfk
