#include "rkhs/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace rkhs {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, res.ptr);
}

static bool parse_field(const std::string& field, double& out) {
    const char* s = field.c_str();
    char* end = nullptr;
    out = std::strtod(s, &end);
    if (end == s) return false;
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    return *end == '\0';
}

std::vector<std::vector<double>> read_numeric_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        bool ok = true;
        while (std::getline(ss, field, ',')) {
            double v;
            if (!parse_field(field, v)) {
                ok = false;
                break;
            }
            row.push_back(v);
        }
        if (!ok) {
            if (first_content_line) {  // header
                first_content_line = false;
                continue;
            }
            throw std::runtime_error("read_numeric_csv: non-numeric field in line: " + line);
        }
        first_content_line = false;
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv_row(std::ostream& out, const std::vector<double>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        out << format_double(row[i]);
    }
    out << '\n';
}

}  // namespace rkhs
