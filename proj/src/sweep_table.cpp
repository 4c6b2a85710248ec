#include "spindimer/sweep_table.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spindimer {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_csv(std::ostream& os, const SweepTable& table) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c) os << ',';
        os << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::invalid_argument("write_csv: ragged row");
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << format_value(row[c]);
        }
        os << '\n';
    }
}

SweepTable read_csv(std::istream& is) {
    SweepTable t;
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("read_csv: empty input");
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.columns.push_back(cell);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream rs(line);
        while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != t.columns.size())
            throw std::runtime_error("read_csv: ragged row");
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace spindimer
