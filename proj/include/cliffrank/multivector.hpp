#pragma once

#include <map>
#include <string>

#include "cliffrank/blade.hpp"
#include "cliffrank/gaussian.hpp"
#include "cliffrank/grade_set.hpp"
#include "cliffrank/signature.hpp"

namespace cliffrank {

// Sparse blade -> coefficient map. Canonical form: no stored zeros.
// Immutable in spirit: every operation returns a fresh value.
class Multivector {
public:
    Multivector() = default;

    static Multivector zero() { return {}; }
    static Multivector scalar(Gaussian c) {
        Multivector m;
        m.add_term(0, std::move(c));
        return m;
    }
    static Multivector basis_blade(BladeBits bits, Gaussian c = Gaussian(1)) {
        Multivector m;
        m.add_term(bits, std::move(c));
        return m;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<BladeBits, Gaussian>& terms() const { return terms_; }

    Gaussian coefficient(BladeBits bits) const {
        auto it = terms_.find(bits);
        return it == terms_.end() ? Gaussian() : it->second;
    }

    void add_term(BladeBits bits, Gaussian c) {
        if (c.is_zero()) return;
        auto it = terms_.find(bits);
        if (it == terms_.end()) {
            terms_.emplace(bits, std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Multivector operator-() const;
    friend Multivector operator+(const Multivector& a, const Multivector& b);
    friend Multivector operator-(const Multivector& a, const Multivector& b);
    friend Multivector operator*(const Gaussian& c, const Multivector& m);
    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.terms_ == b.terms_;
    }

    // Deterministic rendering, terms ordered by (grade, bits): "2*e + i*e^{1,3}".
    std::string str() const;

private:
    std::map<BladeBits, Gaussian> terms_;
};

Multivector geometric_product(const Signature& sig, const Multivector& x, const Multivector& y);

// Terms of grade exactly k; k outside [0, n] is a domain error.
Multivector grade_projection(const Signature& sig, const Multivector& x, int k);

// { grade(B) : B in terms of x }; empty for zero.
GradeSet support_grades(const Multivector& x);

Multivector commutator(const Signature& sig, const Multivector& x, const Multivector& y);
Multivector anticommutator(const Signature& sig, const Multivector& x, const Multivector& y);

// Reverses blade factors (grade-k sign (-1)^{k(k-1)/2}) and conjugates
// coefficients. An involution and an anti-automorphism.
Multivector conjugation_star(const Multivector& x);

// U*U = e, membership in the pseudounitary group WC(p,q).
bool is_group_element(const Signature& sig, const Multivector& u);

// u* = -u, membership in the Lie algebra wC(p,q).
bool is_lie_element(const Multivector& x);

} // namespace cliffrank
