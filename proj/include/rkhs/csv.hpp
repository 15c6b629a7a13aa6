#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rkhs {

/// Shortest decimal string that round-trips to the same double. Used for
/// every numeric CSV/JSON artifact so outputs are byte-deterministic.
std::string format_double(double v);

/// Parse a full CSV stream of doubles. Lines starting with '#' and blank
/// lines are skipped; the optional single header line (non-numeric first
/// field) is skipped as well.
std::vector<std::vector<double>> read_numeric_csv(std::istream& in);

void write_csv_row(std::ostream& out, const std::vector<double>& row);

}  // namespace rkhs
