#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliffrank {

#ifndef CLIFFRANK_MAX_N
#define CLIFFRANK_MAX_N 16
#endif

// Metric data (p, q) for Cl(p,q): n = p + q generators, the first p squaring
// to +e and the remaining q to -e.
class Signature {
public:
    static constexpr int kMaxN = CLIFFRANK_MAX_N;

    Signature(int p, int q) : p_(p), q_(q) {
        if (p < 0 || q < 0)
            throw std::domain_error("Signature: p and q must be nonnegative");
        const int n = p + q;
        if (n < 1 || n > kMaxN)
            throw std::domain_error("Signature: n = p+q must be in [1, " +
                                    std::to_string(kMaxN) + "], got " + std::to_string(n));
    }

    int p() const { return p_; }
    int q() const { return q_; }
    int n() const { return p_ + q_; }

    // eta^{aa} for generator index a in [1, n].
    int metric(int a) const {
        if (a < 1 || a > n())
            throw std::domain_error("Signature::metric: index out of range");
        return a <= p_ ? +1 : -1;
    }

    // Mask of generator slots (0-based bits) carrying metric -1.
    std::uint32_t negative_mask() const {
        return (1u << n()) - (1u << p_);
    }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }

private:
    int p_, q_;
};

} // namespace cliffrank
