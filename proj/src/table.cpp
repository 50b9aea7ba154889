#include "cliffrank/table.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cliffrank {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) out.push_back(field);
    return out;
}

BracketKind kind_from_name(const std::string& name) {
    if (name == "commutator") return BracketKind::commutator;
    if (name == "anticommutator") return BracketKind::anticommutator;
    throw std::domain_error("unknown bracket kind: " + name);
}

} // namespace

std::string render_table_text(const RankTable& table) {
    std::string out = "n=" + std::to_string(table.n);
    for (int l = 1; l <= table.n; ++l) out += "\t" + std::to_string(l);
    out += "\n";
    for (int k = 1; k <= table.n; ++k) {
        out += std::to_string(k);
        for (int l = 1; l <= table.n; ++l) out += "\t" + grade_set_text(table.cell(k, l));
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json table_to_json(const RankTable& table) {
    nlohmann::ordered_json doc;
    doc["n"] = table.n;
    doc["kind"] = bracket_kind_name(table.kind);
    auto& cells = doc["cells"] = nlohmann::ordered_json::array();
    for (int k = 1; k <= table.n; ++k) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int l = 1; l <= table.n; ++l) row.push_back(table.cell(k, l));
        cells.push_back(std::move(row));
    }
    return doc;
}

RankTable table_from_json(const nlohmann::ordered_json& doc) {
    RankTable t;
    t.n = doc.at("n").get<int>();
    t.kind = kind_from_name(doc.at("kind").get<std::string>());
    if (t.n < 1) throw std::domain_error("table_from_json: n must be >= 1");
    t.cells.resize(static_cast<std::size_t>(t.n) * t.n);
    const auto& cells = doc.at("cells");
    if (static_cast<int>(cells.size()) != t.n)
        throw std::domain_error("table_from_json: wrong row count");
    for (int k = 1; k <= t.n; ++k) {
        const auto& row = cells.at(static_cast<std::size_t>(k) - 1);
        if (static_cast<int>(row.size()) != t.n)
            throw std::domain_error("table_from_json: wrong column count");
        for (int l = 1; l <= t.n; ++l) {
            GradeSet s;
            for (const auto& g : row.at(static_cast<std::size_t>(l) - 1))
                s.insert(g.get<int>());
            t.cell(k, l) = std::move(s);
        }
    }
    return t;
}

CellGrid parse_table_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::domain_error("parse_table_text: empty input");
    const auto header = split_tabs(line);
    if (header.empty() || header[0].rfind("n=", 0) != 0)
        throw std::domain_error("parse_table_text: header must start with n=<n>");
    const int n = std::stoi(header[0].substr(2));
    if (n < 1 || static_cast<int>(header.size()) != n + 1)
        throw std::domain_error("parse_table_text: bad header width");
    for (int l = 1; l <= n; ++l)
        if (header[static_cast<std::size_t>(l)] != std::to_string(l))
            throw std::domain_error("parse_table_text: bad column header");

    CellGrid grid;
    grid.n = n;
    grid.cells.resize(static_cast<std::size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        if (!std::getline(in, line))
            throw std::domain_error("parse_table_text: missing row " + std::to_string(k));
        const auto row = split_tabs(line);
        if (static_cast<int>(row.size()) != n + 1 || row[0] != std::to_string(k))
            throw std::domain_error("parse_table_text: bad row " + std::to_string(k));
        for (int l = 1; l <= n; ++l)
            grid.cells[static_cast<std::size_t>(k - 1) * n + (l - 1)] =
                row[static_cast<std::size_t>(l)];
    }
    return grid;
}

CellGrid load_golden_table(const std::string& dir, BracketKind kind, int n) {
    const std::string path =
        dir + "/" + bracket_kind_name(kind) + "_n" + std::to_string(n) + ".tsv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden table " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    CellGrid grid = parse_table_text(buf.str());
    if (grid.n != n) throw std::runtime_error("golden table " + path + " has wrong n");
    return grid;
}

std::vector<OverlayEntry> load_overlay(const std::string& dir) {
    const std::string path = dir + "/known_discrepancies.tsv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open overlay file " + path);
    std::vector<OverlayEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 5)
            throw std::runtime_error("overlay file " + path + ": expected 5 fields per line");
        OverlayEntry e;
        e.kind = kind_from_name(fields[0]);
        e.n = std::stoi(fields[1]);
        e.k = std::stoi(fields[2]);
        e.l = std::stoi(fields[3]);
        e.printed = fields[4];
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace cliffrank
