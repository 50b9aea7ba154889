#include "cliffrank/grade_set.hpp"

namespace cliffrank {

GradeSet grade_progression(int from, int to, int step) {
    GradeSet s;
    for (int g = from; g <= to; g += step) s.insert(g);
    return s;
}

std::string grade_set_text(const GradeSet& s) {
    if (s.empty()) return "-";
    std::string out;
    for (int g : s) {
        if (!out.empty()) out += '/';
        out += std::to_string(g);
    }
    return out;
}

bool is_step4_progression(const GradeSet& s) {
    if (s.size() < 2) return true;
    int prev = *s.begin();
    for (auto it = std::next(s.begin()); it != s.end(); ++it) {
        if (*it - prev != 4) return false;
        prev = *it;
    }
    return true;
}

} // namespace cliffrank
