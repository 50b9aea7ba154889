#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cliffrank/rank_formulas.hpp"

namespace cliffrank {

// Byte-exact text form: first line "n=<n>" then column headers 1..n,
// tab-separated; one row per k with its header; cells "/"-joined grade
// lists, "-" for empty.
std::string render_table_text(const RankTable& table);

nlohmann::ordered_json table_to_json(const RankTable& table);
RankTable table_from_json(const nlohmann::ordered_json& doc);

// Raw cell strings of a table file, header row/column stripped.
// Cells keep their verbatim text so garbled golden cells survive parsing.
struct CellGrid {
    int n = 0;
    std::vector<std::string> cells; // row-major, n*n

    const std::string& cell(int k, int l) const { return cells[(k - 1) * n + (l - 1)]; }
};

CellGrid parse_table_text(const std::string& text);

// Golden files: <dir>/<kind>_n<n>.tsv.
CellGrid load_golden_table(const std::string& dir, BracketKind kind, int n);

// Documented cells where the golden file disagrees with the computed
// tables: <dir>/known_discrepancies.tsv, lines "kind\tn\tk\tl\tprinted".
struct OverlayEntry {
    BracketKind kind = BracketKind::commutator;
    int n = 0, k = 0, l = 0;
    std::string printed;
};

std::vector<OverlayEntry> load_overlay(const std::string& dir);

} // namespace cliffrank
