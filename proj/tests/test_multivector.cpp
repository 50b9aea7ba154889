#include <doctest.h>

#include "cliffrank/multivector.hpp"

using namespace cliffrank;

namespace {
constexpr BladeBits e1 = 0b001;
constexpr BladeBits e2 = 0b010;
constexpr BladeBits e12 = 0b011;
} // namespace

TEST_CASE("geometric product basics") {
    const Signature cl10(1, 0);
    const auto x = Multivector::basis_blade(e1);
    CHECK(geometric_product(cl10, x, x) == Multivector::scalar(Gaussian(1)));

    const Signature cl20(2, 0);
    // (e^1 + e^2)(e^1 - e^2) = e - e^{12} + e^{12}... expanded exactly below.
    Multivector a = Multivector::basis_blade(e1) + Multivector::basis_blade(e2);
    Multivector b = Multivector::basis_blade(e1) - Multivector::basis_blade(e2);
    Multivector expected;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) {
            const SignedBlade p = blade_product_reference(cl20, ta, tb);
            Gaussian c = ca * cb;
            expected.add_term(p.blade, p.sign < 0 ? -c : c);
        }
    CHECK(geometric_product(cl20, a, b) == expected);
    CHECK(expected == Gaussian(-2) * Multivector::basis_blade(e12));
}

TEST_CASE("identity is neutral for the geometric product") {
    const Signature sig(1, 2);
    Multivector x = Multivector::basis_blade(0b101, Gaussian(3, -2)) +
                    Multivector::basis_blade(0b010, Gaussian::unit_i());
    const Multivector e = Multivector::scalar(Gaussian(1));
    CHECK(geometric_product(sig, e, x) == x);
    CHECK(geometric_product(sig, x, e) == x);
}

TEST_CASE("grade projection and support") {
    const Signature sig(2, 0);
    Multivector x = Multivector::scalar(Gaussian(1)) + Multivector::basis_blade(e12);
    CHECK(grade_projection(sig, x, 2) == Multivector::basis_blade(e12));
    CHECK(grade_projection(sig, x, 1).is_zero());
    CHECK_THROWS_AS(grade_projection(sig, x, 3), std::domain_error);

    CHECK(support_grades(Multivector::zero()).empty());
    Multivector y = Multivector::scalar(Gaussian::unit_i()) + Multivector::basis_blade(e12);
    CHECK(support_grades(y) == GradeSet{0, 2});

    // Projections partition the terms.
    Multivector sum;
    for (int k = 0; k <= sig.n(); ++k) sum = sum + grade_projection(sig, x, k);
    CHECK(sum == x);
}

TEST_CASE("commutator and anticommutator basics") {
    const Signature cl30(3, 0);
    const auto a = Multivector::basis_blade(0b011);
    const auto b = Multivector::basis_blade(0b110);
    CHECK(commutator(cl30, a, a).is_zero());
    CHECK(commutator(cl30, a, Multivector::scalar(Gaussian(7))).is_zero());
    CHECK(support_grades(commutator(cl30, a, b)) == GradeSet{2});

    const Signature cl10(1, 0);
    const auto v = Multivector::basis_blade(e1);
    CHECK(anticommutator(cl10, v, v) == Multivector::scalar(Gaussian(2)));
}

TEST_CASE("defining relation: {e^a, e^b} = 2 eta^{ab} e") {
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p) {
            const Signature sig(p, n - p);
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    const auto ea = Multivector::basis_blade(BladeBits{1} << (a - 1));
                    const auto eb = Multivector::basis_blade(BladeBits{1} << (b - 1));
                    Multivector expected;
                    if (a == b) expected = Multivector::scalar(Gaussian(2 * sig.metric(a)));
                    CHECK(anticommutator(sig, ea, eb) == expected);
                }
        }
}

TEST_CASE("conjugation star") {
    CHECK(conjugation_star(Multivector::scalar(Gaussian(1))) ==
          Multivector::scalar(Gaussian(1)));
    CHECK(conjugation_star(Multivector::basis_blade(e12)) == -Multivector::basis_blade(e12));
    CHECK(conjugation_star(Multivector::basis_blade(e1, Gaussian::unit_i())) ==
          Multivector::basis_blade(e1, -Gaussian::unit_i()));
}

TEST_CASE("group and lie membership predicates") {
    const Signature cl10(1, 0);
    CHECK(is_group_element(cl10, Multivector::scalar(Gaussian(1))));
    CHECK(is_group_element(cl10, Multivector::basis_blade(e1)));
    CHECK_FALSE(is_group_element(cl10, Multivector::scalar(Gaussian(2))));

    CHECK(is_lie_element(Multivector::scalar(Gaussian::unit_i())));
    CHECK(is_lie_element(Multivector::basis_blade(e12)));
    CHECK_FALSE(is_lie_element(Multivector::basis_blade(e1)));
}

TEST_CASE("rendering is deterministic and readable") {
    Multivector x = Multivector::scalar(Gaussian(2)) +
                    Multivector::basis_blade(e12, Gaussian::unit_i()) +
                    Multivector::basis_blade(e1, Gaussian(-1));
    CHECK(x.str() == "2*e + -e^{1} + i*e^{1,2}");
    CHECK(Multivector::zero().str() == "0");
}
