#include "cliffrank/rank_formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "cliffrank/blade.hpp"
#include "cliffrank/errors.hpp"

namespace cliffrank {

namespace {

void check_ranks(int n, int k, int l) {
    if (n < 1) throw std::domain_error("rank formulas: n must be >= 1");
    if (k < 0 || k > n || l < 0 || l > n)
        throw std::domain_error("rank formulas: ranks must lie in [0, n]");
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

} // namespace

std::string bracket_kind_name(BracketKind kind) {
    return kind == BracketKind::commutator ? "commutator" : "anticommutator";
}

GradeSet kernel_grades(int n, int k, int l, BracketKind kind) {
    check_ranks(n, k, l);
    const int a = std::max(k, l);
    const int b = std::min(k, l);
    const bool want_odd = (kind == BracketKind::commutator);
    GradeSet out;
    for (int s = std::max(0, a + b - n); s <= b; ++s) {
        const bool odd = ((k * l - s) & 1) != 0;
        if (odd == want_odd) out.insert(a + b - 2 * s);
    }
    return out;
}

GradeSet closed_form_grades(int n, int k, int l, BracketKind kind) {
    check_ranks(n, k, l);
    // The case analysis assumes k >= l; brackets are (anti)symmetric in
    // their arguments, so the support is unchanged under a swap.
    if (k < l) std::swap(k, l);

    const bool k_even = (k % 2 == 0);
    const bool l_even = (l % 2 == 0);
    const bool n_even = (n % 2 == 0);

    if (kind == BracketKind::commutator) {
        if (l == 0) return {};
        if (k == n) {
            if (n_even && !l_even) return {n - l};
            return {};
        }
        if (n >= k + l) {
            if (l_even) return grade_progression(k - l + 2, k + l - 2);
            if (k_even) return grade_progression(k - l, k + l - 2);
            return grade_progression(k - l + 2, k + l); // k, l both odd
        }
        // k + l > n, k != n, l != 0
        if (k_even && !l_even)
            return n_even ? grade_progression(k - l, 2 * n - k - l)
                          : grade_progression(k - l, 2 * n - k - l - 2);
        if ((n_even && !k_even) || (!n_even && k_even && l_even))
            return grade_progression(k - l + 2, 2 * n - k - l);
        // (n odd, k odd) or (n even, k even, l even)
        return grade_progression(k - l + 2, 2 * n - k - l - 2);
    }

    // anticommutator
    if (l == 0) return {k};
    if (k == n) {
        if (n_even && !l_even) return {};
        return {n - l};
    }
    if (n >= k + l) {
        if (l_even) return grade_progression(k - l, k + l);
        if (k_even) return grade_progression(k - l + 2, k + l);
        return grade_progression(k - l, k + l - 2); // k, l both odd
    }
    if (k_even && !l_even)
        return n_even ? grade_progression(k - l + 2, 2 * n - k - l - 2)
                      : grade_progression(k - l + 2, 2 * n - k - l);
    if ((!n_even && !k_even) || (n_even && k_even && l_even))
        return grade_progression(k - l, 2 * n - k - l);
    // (n even, k odd) or (n odd, k even, l even)
    return grade_progression(k - l, 2 * n - k - l - 2);
}

GradeSet bruteforce_grades(const Signature& sig, int k, int l, BracketKind kind,
                           std::uint64_t budget) {
    const int n = sig.n();
    check_ranks(n, k, l);
    const std::uint64_t pairs = binomial(n, k) * binomial(n, l);
    if (pairs > budget)
        throw resource_error("bruteforce_grades: " + std::to_string(pairs) +
                             " blade pairs exceed the budget of " + std::to_string(budget));

    const auto left = blades_of_grade(n, k);
    const auto right = blades_of_grade(n, l);
    const bool comm = (kind == BracketKind::commutator);
    GradeSet out;
    for (const BladeBits a : left)
        for (const BladeBits b : right) {
            const SignedBlade ab = blade_product(sig, a, b);
            const SignedBlade ba = blade_product(sig, b, a);
            const int coeff = comm ? ab.sign - ba.sign : ab.sign + ba.sign;
            if (coeff != 0) out.insert(grade(ab.blade));
        }
    return out;
}

RankTable build_table(int n, BracketKind kind) {
    if (n < 1 || n > Signature::kMaxN)
        throw std::domain_error("build_table: n out of range");
    RankTable t;
    t.n = n;
    t.kind = kind;
    t.cells.resize(static_cast<std::size_t>(n) * n);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) t.cell(k, l) = closed_form_grades(n, k, l, kind);
    return t;
}

} // namespace cliffrank
