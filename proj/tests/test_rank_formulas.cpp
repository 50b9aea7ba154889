#include <doctest.h>

#include "cliffrank/errors.hpp"
#include "cliffrank/multivector.hpp"
#include "cliffrank/rank_formulas.hpp"

using namespace cliffrank;

TEST_CASE("kernel rule: pinned cells") {
    CHECK(kernel_grades(6, 3, 3, BracketKind::commutator) == GradeSet{2, 6});
    CHECK(kernel_grades(5, 5, 2, BracketKind::commutator).empty());
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(kernel_grades(n, k, 0, BracketKind::commutator).empty());
    // {U^k, V^0} = W^k
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(kernel_grades(n, k, 0, BracketKind::anticommutator) == GradeSet{k});
    CHECK_THROWS_AS(kernel_grades(3, 4, 1, BracketKind::commutator), std::domain_error);
}

TEST_CASE("closed-form path: pinned cells") {
    CHECK(closed_form_grades(10, 5, 5, BracketKind::commutator) == GradeSet{2, 6, 10});
    CHECK(closed_form_grades(4, 2, 2, BracketKind::anticommutator) == GradeSet{0, 4});
    CHECK(closed_form_grades(2, 2, 1, BracketKind::commutator) == GradeSet{1});
    CHECK(closed_form_grades(7, 4, 3, BracketKind::anticommutator) == GradeSet{3, 7});
}

TEST_CASE("closed form and kernel rule agree everywhere") {
    for (int n = 1; n <= 20; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= k; ++l)
                for (const auto kind : {BracketKind::commutator, BracketKind::anticommutator})
                    REQUIRE(closed_form_grades(n, k, l, kind) == kernel_grades(n, k, l, kind));
}

TEST_CASE("parity disjointness: the two kinds partition the stratum grades") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= k; ++l) {
                const GradeSet comm = kernel_grades(n, k, l, BracketKind::commutator);
                const GradeSet anti = kernel_grades(n, k, l, BracketKind::anticommutator);
                GradeSet all;
                for (int s = std::max(0, k + l - n); s <= l; ++s) all.insert(k + l - 2 * s);
                GradeSet both = comm;
                both.insert(anti.begin(), anti.end());
                REQUIRE(both == all);
                for (int g : comm) REQUIRE(!anti.count(g));
            }
}

TEST_CASE("every nonempty support is a step-4 progression") {
    for (int n = 1; n <= 16; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l)
                for (const auto kind : {BracketKind::commutator, BracketKind::anticommutator})
                    REQUIRE(is_step4_progression(closed_form_grades(n, k, l, kind)));
}

TEST_CASE("brute-force supports: pinned cells") {
    CHECK(bruteforce_grades(Signature(3, 0), 2, 2, BracketKind::commutator) == GradeSet{2});
    CHECK(bruteforce_grades(Signature(6, 0), 3, 3, BracketKind::commutator) == GradeSet{2, 6});
    for (int l = 0; l <= 3; ++l)
        CHECK(bruteforce_grades(Signature(1, 2), 0, l, BracketKind::commutator).empty());
}

TEST_CASE("blade-level brute force agrees with the multivector path") {
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p) {
            const Signature sig(p, n - p);
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= n; ++l)
                    for (const auto kind :
                         {BracketKind::commutator, BracketKind::anticommutator}) {
                        GradeSet via_mv;
                        for (const BladeBits a : blades_of_grade(n, k))
                            for (const BladeBits b : blades_of_grade(n, l)) {
                                const auto ma = Multivector::basis_blade(a);
                                const auto mb = Multivector::basis_blade(b);
                                const auto br = kind == BracketKind::commutator
                                                    ? commutator(sig, ma, mb)
                                                    : anticommutator(sig, ma, mb);
                                const GradeSet s = support_grades(br);
                                via_mv.insert(s.begin(), s.end());
                            }
                        REQUIRE(bruteforce_grades(sig, k, l, kind) == via_mv);
                    }
        }
}

TEST_CASE("budget overruns raise a resource error naming the cap") {
    CHECK_THROWS_AS(bruteforce_grades(Signature(8, 0), 4, 4, BracketKind::commutator, 10),
                    resource_error);
    try {
        bruteforce_grades(Signature(8, 0), 4, 4, BracketKind::commutator, 10);
    } catch (const resource_error& e) {
        CHECK(std::string(e.what()).find("10") != std::string::npos);
    }
}

TEST_CASE("tables: shape, symmetry and pinned rows") {
    const RankTable t1 = build_table(1, BracketKind::commutator);
    CHECK(t1.cell(1, 1).empty());

    const RankTable t3 = build_table(3, BracketKind::commutator);
    for (int l = 1; l <= 3; ++l) CHECK(t3.cell(3, l).empty());

    const RankTable t7 = build_table(7, BracketKind::anticommutator);
    CHECK(t7.cell(3, 4) == GradeSet{3, 7});

    for (int n = 1; n <= 10; ++n)
        for (const auto kind : {BracketKind::commutator, BracketKind::anticommutator}) {
            const RankTable t = build_table(n, kind);
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) REQUIRE(t.cell(k, l) == t.cell(l, k));
        }
}

TEST_CASE("signature independence of brute-force supports") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l)
                for (const auto kind : {BracketKind::commutator, BracketKind::anticommutator}) {
                    const GradeSet base = bruteforce_grades(Signature(n, 0), k, l, kind);
                    for (int p = 0; p < n; ++p)
                        REQUIRE(bruteforce_grades(Signature(p, n - p), k, l, kind) == base);
                }
}
