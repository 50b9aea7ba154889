#include "cliffrank/multivector.hpp"

#include <algorithm>
#include <vector>

namespace cliffrank {

Multivector Multivector::operator-() const {
    Multivector out;
    for (const auto& [bits, c] : terms_) out.terms_.emplace(bits, -c);
    return out;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
    Multivector out = a;
    for (const auto& [bits, c] : b.terms_) out.add_term(bits, c);
    return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
    Multivector out = a;
    for (const auto& [bits, c] : b.terms_) out.add_term(bits, -c);
    return out;
}

Multivector operator*(const Gaussian& c, const Multivector& m) {
    Multivector out;
    if (c.is_zero()) return out;
    for (const auto& [bits, t] : m.terms_) out.add_term(bits, c * t);
    return out;
}

std::string Multivector::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<BladeBits, const Gaussian*>> ordered;
    ordered.reserve(terms_.size());
    for (const auto& [bits, c] : terms_) ordered.emplace_back(bits, &c);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (grade(a.first) != grade(b.first)) return grade(a.first) < grade(b.first);
        return a.first < b.first;
    });

    std::string out;
    for (const auto& [bits, c] : ordered) {
        if (!out.empty()) out += " + ";
        std::string blade;
        if (bits == 0) {
            blade = "e";
        } else {
            blade = "e^{";
            bool first = true;
            for (int i = 0; i < Signature::kMaxN; ++i)
                if (bits & (BladeBits{1} << i)) {
                    if (!first) blade += ',';
                    blade += std::to_string(i + 1);
                    first = false;
                }
            blade += '}';
        }
        const std::string cs = c->str();
        if (cs == "1")
            out += blade;
        else if (cs == "-1")
            out += "-" + blade;
        else
            out += cs + "*" + blade;
    }
    return out;
}

Multivector geometric_product(const Signature& sig, const Multivector& x, const Multivector& y) {
    Multivector out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            const SignedBlade p = blade_product(sig, a, b);
            Gaussian c = ca * cb;
            if (p.sign < 0) c = -c;
            out.add_term(p.blade, std::move(c));
        }
    return out;
}

Multivector grade_projection(const Signature& sig, const Multivector& x, int k) {
    if (k < 0 || k > sig.n())
        throw std::domain_error("grade_projection: grade out of range [0, n]");
    Multivector out;
    for (const auto& [bits, c] : x.terms())
        if (grade(bits) == k) out.add_term(bits, c);
    return out;
}

GradeSet support_grades(const Multivector& x) {
    GradeSet s;
    for (const auto& [bits, c] : x.terms()) s.insert(grade(bits));
    return s;
}

Multivector commutator(const Signature& sig, const Multivector& x, const Multivector& y) {
    return geometric_product(sig, x, y) - geometric_product(sig, y, x);
}

Multivector anticommutator(const Signature& sig, const Multivector& x, const Multivector& y) {
    return geometric_product(sig, x, y) + geometric_product(sig, y, x);
}

Multivector conjugation_star(const Multivector& x) {
    Multivector out;
    for (const auto& [bits, c] : x.terms()) {
        const int k = grade(bits);
        const bool flip = ((k * (k - 1) / 2) & 1) != 0;
        Gaussian cc = c.conj();
        out.add_term(bits, flip ? -cc : cc);
    }
    return out;
}

bool is_group_element(const Signature& sig, const Multivector& u) {
    return geometric_product(sig, conjugation_star(u), u) == Multivector::scalar(Gaussian(1));
}

bool is_lie_element(const Multivector& x) {
    return conjugation_star(x) == -x;
}

} // namespace cliffrank
