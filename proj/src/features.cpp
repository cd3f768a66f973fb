#include "sketcheval/features.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <unordered_set>

#include "sketcheval/errors.hpp"

namespace sketcheval {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_cell(const std::string& cell, const std::string& file, std::size_t line) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw format_error(file + ":" + std::to_string(line) + ": non-numeric cell '" +
                           cell + "'");
    return v;
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

long FeatureTable::find(const std::string& id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return static_cast<long>(i);
    return -1;
}

FeatureTable load_feature_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open feature file: " + path.string());
    const std::string name = path.string();

    std::string line;
    if (!std::getline(in, line))
        throw format_error(name + ": empty file, expected header 'id,f0,...'");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2 || header[0] != "id")
        throw format_error(name + ":1: header must be 'id,f0,...,f{d-1}'");
    const std::size_t d = header.size() - 1;

    FeatureTable table;
    table.matrix.d = d;
    table.matrix.source = FeatureSource::external_file;
    std::unordered_set<std::string> seen;

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != d + 1)
            throw format_error(name + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(d + 1) + " cells, got " +
                               std::to_string(cells.size()));
        if (!seen.insert(cells[0]).second)
            throw format_error(name + ":" + std::to_string(line_no) + ": duplicate id '" +
                               cells[0] + "'");
        table.ids.push_back(cells[0]);
        for (std::size_t i = 1; i < cells.size(); ++i)
            table.matrix.values.push_back(parse_cell(cells[i], name, line_no));
    }
    table.matrix.n = table.ids.size();
    return table;
}

}  // namespace sketcheval
