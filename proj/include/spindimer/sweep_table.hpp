#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spindimer {

// Rectangular grid of rows for CSV/JSON emission.  Rows are kept in
// deterministic grid order (outer axis first).
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Comma-separated, header row, values with 12 significant digits,
// line-feed terminated.
void write_csv(std::ostream& os, const SweepTable& table);
std::string format_value(double v);

// Parses a file produced by write_csv (used by round-trip checks).
SweepTable read_csv(std::istream& is);

}  // namespace spindimer
