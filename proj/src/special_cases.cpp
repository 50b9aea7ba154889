#include "cliffrank/special_cases.hpp"

#include <functional>
#include <optional>

namespace cliffrank {

namespace {

struct Audit {
    SpecialCaseReport report;

    // Compare one stated formula instance against the closed-form path.
    void check(const std::string& label, int n, int k, int l, BracketKind kind,
               const GradeSet& expected) {
        ++report.checks;
        const GradeSet got = closed_form_grades(n, k, l, kind);
        if (got != expected)
            report.mismatches.push_back(label + " at n=" + std::to_string(n) + ", k=" +
                                        std::to_string(k) + ", l=" + std::to_string(l) + " (" +
                                        bracket_kind_name(kind) + "): stated " +
                                        grade_set_text(expected) + ", computed " +
                                        grade_set_text(got));
    }

    void skip(const std::string& label, const std::string& reason) {
        report.skipped.push_back(label + ": skipped: " + reason);
    }
};

// Equal ranks k = l.
void audit_equal_ranks(Audit& a, int n_max) {
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            GradeSet comm;
            if (k != 0 && k != n) {
                if (n >= 2 * k)
                    comm = (k % 2) ? grade_progression(2, 2 * k)
                                   : grade_progression(2, 2 * k - 2);
                else
                    comm = ((n % 2) != (k % 2)) ? grade_progression(2, 2 * n - 2 * k)
                                                : grade_progression(2, 2 * n - 2 * k - 2);
            }
            a.check("equal ranks", n, k, k, BracketKind::commutator, comm);

            if (k != 0 && k != n) {
                GradeSet anti;
                if (n >= 2 * k)
                    anti = (k % 2) ? grade_progression(0, 2 * k - 2)
                                   : grade_progression(0, 2 * k);
                else
                    anti = ((n % 2) != (k % 2)) ? grade_progression(0, 2 * n - 2 * k - 2)
                                                : grade_progression(0, 2 * n - 2 * k);
                a.check("equal ranks", n, k, k, BracketKind::anticommutator, anti);
            }
        }
    a.skip("equal ranks, anticommutator, k = 0 or k = n",
           "printed \"0\" is ambiguous between the zero element and the grade-0 component; "
           "the near-n block states the grade-0 reading unambiguously");
}

// Fixed second rank l in {1,2,3,4}, first rank a in [l, n].
void audit_fixed_second_rank(Audit& au, int n_max) {
    for (int n = 1; n <= n_max; ++n)
        for (int a = 1; a <= n; ++a) {
            // l = 1
            if (a >= 1) {
                GradeSet comm = (a % 2 == 0) ? GradeSet{a - 1}
                               : (a != n)    ? GradeSet{a + 1}
                                             : GradeSet{};
                au.check("second rank 1", n, a, 1, BracketKind::commutator, comm);
                GradeSet anti = (a % 2 == 1) ? GradeSet{a - 1}
                                : (a != n)   ? GradeSet{a + 1}
                                             : GradeSet{};
                au.check("second rank 1", n, a, 1, BracketKind::anticommutator, anti);
            }
            // l = 2
            if (a >= 2) {
                au.check("second rank 2", n, a, 2, BracketKind::commutator,
                         a != n ? GradeSet{a} : GradeSet{});
                au.check("second rank 2", n, a, 2, BracketKind::anticommutator,
                         a <= n - 2 ? GradeSet{a - 2, a + 2} : GradeSet{a - 2});
            }
            // l = 3
            if (a >= 3) {
                GradeSet comm;
                if (a % 2 == 0)
                    comm = (a <= n - 2) ? GradeSet{a - 3, a + 1} : GradeSet{a - 3};
                else if (a <= n - 3)
                    comm = {a - 1, a + 3};
                else if (a == n - 2 || a == n - 1)
                    comm = {a - 1};
                au.check("second rank 3", n, a, 3, BracketKind::commutator, comm);

                GradeSet anti;
                if (a % 2 == 1)
                    anti = (a <= n - 2) ? GradeSet{a - 3, a + 1} : GradeSet{a - 3};
                else if (a <= n - 3)
                    anti = {a - 1, a + 3};
                else if (a == n - 2 || a == n - 1)
                    anti = {a - 1};
                au.check("second rank 3", n, a, 3, BracketKind::anticommutator, anti);
            }
            // l = 4
            if (a >= 4) {
                GradeSet comm;
                if (a <= n - 3)
                    comm = {a - 2, a + 2};
                else if (a == n - 2 || a == n - 1)
                    comm = {a - 2};
                au.check("second rank 4", n, a, 4, BracketKind::commutator, comm);

                GradeSet anti;
                if (a <= n - 4)
                    anti = {a - 4, a, a + 4};
                else if (a == n - 3 || a == n - 2)
                    anti = {a - 4, a};
                else
                    anti = {a - 4};
                au.check("second rank 4", n, a, 4, BracketKind::anticommutator, anti);
            }
        }
}

// Small-rank pairs (k, l), k,l <= 4. The rank superscripts of this block are
// damaged in the source; the pairs below are recovered from the surrounding
// ordering and cross-checked by the stated n-conditions.
void audit_small_ranks(Audit& a, int n_max) {
    using K = BracketKind;
    struct Rule {
        int k, l;
        K kind;
        std::function<std::optional<GradeSet>(int)> stated; // nullopt = sub-case skipped
    };
    const std::vector<Rule> rules = {
        {1, 1, K::commutator, [](int n) { return n >= 2 ? GradeSet{2} : GradeSet{}; }},
        {1, 1, K::anticommutator, [](int) { return GradeSet{0}; }},
        {2, 1, K::commutator, [](int) { return GradeSet{1}; }},
        {2, 1, K::anticommutator, [](int n) { return n >= 3 ? GradeSet{3} : GradeSet{}; }},
        {2, 2, K::commutator, [](int n) { return n >= 3 ? GradeSet{2} : GradeSet{}; }},
        {2, 2, K::anticommutator,
         [](int n) { return n >= 4 ? GradeSet{0, 4} : GradeSet{0}; }},
        {3, 1, K::commutator, [](int n) { return n >= 4 ? GradeSet{4} : GradeSet{}; }},
        {3, 1, K::anticommutator, [](int) { return GradeSet{2}; }},
        {3, 2, K::commutator, [](int n) { return n >= 4 ? GradeSet{3} : GradeSet{}; }},
        {3, 2, K::anticommutator,
         [](int n) { return n >= 5 ? GradeSet{1, 5} : GradeSet{1}; }},
        {3, 3, K::commutator,
         [](int n) {
             return n >= 6 ? GradeSet{2, 6} : n >= 4 ? GradeSet{2} : GradeSet{};
         }},
        {3, 3, K::anticommutator,
         [](int n) { return n >= 5 ? GradeSet{0, 4} : GradeSet{0}; }},
        {4, 1, K::commutator, [](int) { return GradeSet{3}; }},
        {4, 1, K::anticommutator, [](int n) { return n >= 5 ? GradeSet{5} : GradeSet{}; }},
        {4, 2, K::commutator, [](int n) { return n >= 5 ? GradeSet{4} : GradeSet{}; }},
        {4, 2, K::anticommutator,
         [](int n) { return n >= 6 ? GradeSet{2, 6} : GradeSet{2}; }},
        {4, 3, K::commutator,
         [](int n) { return n >= 6 ? GradeSet{1, 5} : GradeSet{1}; }},
        {4, 3, K::anticommutator,
         [](int n) {
             return n >= 7 ? GradeSet{3, 7} : n >= 5 ? GradeSet{3} : GradeSet{};
         }},
        {4, 4, K::commutator,
         [](int n) {
             return n >= 7 ? GradeSet{2, 6} : n >= 5 ? GradeSet{2} : GradeSet{};
         }},
        {4, 4, K::anticommutator,
         [](int n) -> std::optional<GradeSet> {
             if (n >= 8) return GradeSet{0, 4, 8};
             if (n >= 6) return GradeSet{0, 4};
             return std::nullopt; // n = 4, 5 printed as "0": unreadable
         }},
    };

    for (const Rule& r : rules)
        for (int n = std::max(r.k, r.l); n <= n_max; ++n)
            if (auto stated = r.stated(n))
                a.check("small ranks (" + std::to_string(r.k) + "," + std::to_string(r.l) + ")",
                        n, r.k, r.l, r.kind, *stated);
    a.skip("small ranks (4,4), anticommutator, n = 4, 5",
           "printed \"0\" is ambiguous between the zero element and the grade-0 component");
}

// Rank pairs close to n.
void audit_near_n(Audit& a, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const bool n_even = (n % 2 == 0);
        a.check("near n (n,n)", n, n, n, BracketKind::commutator, {});
        a.check("near n (n,n)", n, n, n, BracketKind::anticommutator, {0});

        if (n >= 1) {
            a.check("near n (n,n-1)", n, n, n - 1, BracketKind::commutator,
                    n_even ? GradeSet{1} : GradeSet{});
            a.check("near n (n,n-1)", n, n, n - 1, BracketKind::anticommutator,
                    n_even ? GradeSet{} : GradeSet{1});
        }
        a.check("near n (n-1,n-1)", n, n - 1, n - 1, BracketKind::commutator,
                n != 1 ? GradeSet{2} : GradeSet{});
        a.check("near n (n-1,n-1)", n, n - 1, n - 1, BracketKind::anticommutator, {0});
        if (n >= 2) {
            a.check("near n (n,n-2)", n, n, n - 2, BracketKind::commutator, {});
            a.check("near n (n,n-2)", n, n, n - 2, BracketKind::anticommutator, {2});

            GradeSet comm;
            if (!n_even)
                comm = {1};
            else if (n != 2)
                comm = {3};
            a.check("near n (n-1,n-2)", n, n - 1, n - 2, BracketKind::commutator, comm);
            a.check("near n (n-1,n-2)", n, n - 1, n - 2, BracketKind::anticommutator,
                    n_even ? GradeSet{1} : GradeSet{3});

            a.check("near n (n-2,n-2)", n, n - 2, n - 2, BracketKind::commutator,
                    n >= 3 ? GradeSet{2} : GradeSet{});
            a.check("near n (n-2,n-2)", n, n - 2, n - 2, BracketKind::anticommutator,
                    n >= 4 ? GradeSet{0, 4} : GradeSet{0});
        }
    }
}

// First rank close to n, second rank 1 or 2.
void audit_mixed(Audit& a, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const bool n_even = (n % 2 == 0);
        a.check("mixed (n,1)", n, n, 1, BracketKind::commutator,
                n_even ? GradeSet{n - 1} : GradeSet{});
        a.check("mixed (n,1)", n, n, 1, BracketKind::anticommutator,
                n_even ? GradeSet{} : GradeSet{n - 1});
        if (n >= 2) {
            a.check("mixed (n-1,1)", n, n - 1, 1, BracketKind::commutator,
                    n_even ? GradeSet{n} : GradeSet{n - 2});
            a.check("mixed (n-1,1)", n, n - 1, 1, BracketKind::anticommutator,
                    n_even ? GradeSet{n - 2} : GradeSet{n});
        }
        if (n >= 3) {
            a.check("mixed (n-2,1)", n, n - 2, 1, BracketKind::commutator,
                    n_even ? GradeSet{n - 3} : GradeSet{n - 1});
            a.check("mixed (n-2,1)", n, n - 2, 1, BracketKind::anticommutator,
                    n_even ? GradeSet{n - 1} : GradeSet{n - 3});
        }
        if (n >= 2) {
            a.check("mixed (n,2)", n, n, 2, BracketKind::commutator, {});
            a.check("mixed (n,2)", n, n, 2, BracketKind::anticommutator, {n - 2});
        }
        if (n >= 3) {
            a.check("mixed (n-1,2)", n, n - 1, 2, BracketKind::commutator, {n - 1});
            a.check("mixed (n-1,2)", n, n - 1, 2, BracketKind::anticommutator, {n - 3});
        }
        if (n >= 4) {
            a.check("mixed (n-2,2)", n, n - 2, 2, BracketKind::commutator, {n - 2});
            a.check("mixed (n-2,2)", n, n - 2, 2, BracketKind::anticommutator,
                    GradeSet{n - 4, n});
        }
    }
}

} // namespace

SpecialCaseReport special_case_audit(int n_max) {
    if (n_max < 1) throw std::domain_error("special_case_audit: n_max must be >= 1");
    Audit a;
    audit_equal_ranks(a, n_max);
    audit_fixed_second_rank(a, n_max);
    audit_small_ranks(a, n_max);
    audit_near_n(a, n_max);
    audit_mixed(a, n_max);
    return a.report;
}

} // namespace cliffrank
