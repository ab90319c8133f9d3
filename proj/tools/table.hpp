#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace pdmosc::cli {

// Column-major numeric table plus the `# key=value` block written above it.
struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data;  // data[c][row]

    explicit Table(std::vector<std::string> names);
    void add_meta(const std::string& key, const std::string& value);
    void add_meta(const std::string& key, double value);
    void add_row(const std::vector<double>& row);
    std::size_t rows() const;
    const std::vector<double>& column(const std::string& name) const;
};

// %.17g, so a value reads back bit-exact.
std::string format_number(double v);

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

// One polyline per group of rows sharing `group_col` (or a single line when
// group_col is empty), scaled into a fixed viewport.
void write_svg(std::ostream& os, const Table& t, const std::string& x_col, const std::string& y_col,
               const std::string& group_col = "");

} // namespace pdmosc::cli
