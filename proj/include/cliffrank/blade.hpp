#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cliffrank/signature.hpp"

namespace cliffrank {

// A basis blade e^{a1...ak} as a bit set: bit (a-1) set <=> generator e^a
// present. Blade 0 is the identity e.
using BladeBits = std::uint32_t;

inline int grade(BladeBits bits) { return std::popcount(bits); }

inline bool blade_valid(const Signature& sig, BladeBits bits) {
    return bits < (BladeBits{1} << sig.n());
}

struct SignedBlade {
    int sign; // +1 or -1
    BladeBits blade;

    friend bool operator==(const SignedBlade& a, const SignedBlade& b) {
        return a.sign == b.sign && a.blade == b.blade;
    }
};

// Naive oracle for the product of two basis blades: concatenate the two
// ascending index lists, bubble-sort to ascending order counting
// transpositions, then cancel each adjacent coincident pair a,a into a
// factor eta^{aa}.
SignedBlade blade_product_reference(const Signature& sig, BladeBits a, BladeBits b);

// Bit-parallel equivalent: for each pair (i in a, j in b) with i > j one
// transposition is needed; coincident generators contribute their metric.
inline SignedBlade blade_product(const Signature& sig, BladeBits a, BladeBits b) {
    if (!blade_valid(sig, a) || !blade_valid(sig, b))
        throw std::domain_error("blade_product: blade out of range for signature");
    int swaps = 0;
    for (BladeBits hi = a >> 1; hi != 0; hi >>= 1) swaps += std::popcount(hi & b);
    int sign = (swaps & 1) ? -1 : +1;
    if (std::popcount(a & b & sig.negative_mask()) & 1) sign = -sign;
    return {sign, a ^ b};
}

// All blades of the given grade for an n-generator algebra, ascending.
std::vector<BladeBits> blades_of_grade(int n, int k);

} // namespace cliffrank
