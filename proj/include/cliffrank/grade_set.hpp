#pragma once

#include <set>
#include <string>

namespace cliffrank {

// Set of grades present in some expression; always a subset of [0, n].
using GradeSet = std::set<int>;

// Arithmetic progression {from, from+step, ..., to}; empty when to < from.
GradeSet grade_progression(int from, int to, int step = 4);

// "-" for the empty set, otherwise ascending grades joined by "/": "2/6".
std::string grade_set_text(const GradeSet& s);

// True for the empty set and for any arithmetic progression with common
// difference 4.
bool is_step4_progression(const GradeSet& s);

} // namespace cliffrank
