#include "cliffrank/blade.hpp"

namespace cliffrank {

SignedBlade blade_product_reference(const Signature& sig, BladeBits a, BladeBits b) {
    if (!blade_valid(sig, a) || !blade_valid(sig, b))
        throw std::domain_error("blade_product_reference: blade out of range for signature");

    // Concatenated 1-based index lists, a's then b's, each ascending.
    std::vector<int> idx;
    for (int i = 1; i <= sig.n(); ++i)
        if (a & (BladeBits{1} << (i - 1))) idx.push_back(i);
    for (int i = 1; i <= sig.n(); ++i)
        if (b & (BladeBits{1} << (i - 1))) idx.push_back(i);

    // Bubble sort, each transposition of distinct generators flips the sign.
    int sign = 1;
    for (std::size_t pass = 0; pass + 1 < idx.size(); ++pass)
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] > idx[i + 1]) {
                std::swap(idx[i], idx[i + 1]);
                sign = -sign;
            }

    // Cancel adjacent coincident pairs into metric factors.
    BladeBits out = 0;
    for (std::size_t i = 0; i < idx.size();) {
        if (i + 1 < idx.size() && idx[i] == idx[i + 1]) {
            sign *= sig.metric(idx[i]);
            i += 2;
        } else {
            out |= BladeBits{1} << (idx[i] - 1);
            i += 1;
        }
    }
    return {sign, out};
}

std::vector<BladeBits> blades_of_grade(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("blades_of_grade: grade out of range");
    std::vector<BladeBits> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    const BladeBits limit = BladeBits{1} << n;
    BladeBits v = (BladeBits{1} << k) - 1;
    while (v < limit) {
        out.push_back(v);
        // Gosper's hack: next integer with the same popcount.
        const BladeBits t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

} // namespace cliffrank
