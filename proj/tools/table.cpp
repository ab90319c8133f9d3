#include "table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace pdmosc::cli {

Table::Table(std::vector<std::string> names) : columns(std::move(names)), data(columns.size()) {}

void Table::add_meta(const std::string& key, const std::string& value) { meta.emplace_back(key, value); }

void Table::add_meta(const std::string& key, double value) { meta.emplace_back(key, format_number(value)); }

void Table::add_row(const std::vector<double>& row)
{
    if (row.size() != columns.size())
        throw std::logic_error("row width does not match the header");
    for (std::size_t c = 0; c < row.size(); ++c)
        data[c].push_back(row[c]);
}

std::size_t Table::rows() const { return data.empty() ? 0 : data.front().size(); }

const std::vector<double>& Table::column(const std::string& name) const
{
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end())
        throw std::logic_error("no column " + name);
    return data[static_cast<std::size_t>(it - columns.begin())];
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        v = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const Table& t)
{
    for (const auto& [k, v] : t.meta)
        os << "# " << k << '=' << v << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        os << (c ? "," : "") << t.columns[c];
    os << '\n';
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            os << (c ? "," : "") << format_number(t.data[c][r]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t)
{
    // ordered_json keeps the header order; non-finite values become null
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        auto arr = nlohmann::ordered_json::array();
        for (double v : t.data[c])
            arr.push_back(std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr));
        j[t.columns[c]] = std::move(arr);
    }
    os << j.dump() << '\n';
}

void write_svg(std::ostream& os, const Table& t, const std::string& x_col, const std::string& y_col,
               const std::string& group_col)
{
    const auto& xs = t.column(x_col);
    const auto& ys = t.column(y_col);
    const double inf = std::numeric_limits<double>::infinity();
    double x0 = inf, x1 = -inf, y0 = inf, y1 = -inf;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]))
            continue;
        x0 = std::min(x0, xs[i]);
        x1 = std::max(x1, xs[i]);
        y0 = std::min(y0, ys[i]);
        y1 = std::max(y1, ys[i]);
    }
    if (!(x1 > x0))
        x1 = x0 + 1.0;
    if (!(y1 > y0))
        y1 = y0 + 1.0;
    const double W = 640.0, H = 400.0, m = 20.0;
    auto px = [&](double x) { return m + (x - x0) / (x1 - x0) * (W - 2 * m); };
    auto py = [&](double y) { return H - m - (y - y0) / (y1 - y0) * (H - 2 * m); };

    std::map<double, std::vector<std::size_t>> groups;
    if (group_col.empty()) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            groups[0.0].push_back(i);
    } else {
        const auto& g = t.column(group_col);
        for (std::size_t i = 0; i < xs.size(); ++i)
            groups[g[i]].push_back(i);
    }

    char buf[64];
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
    os << "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
    os << "<text x=\"20\" y=\"14\" font-size=\"12\">" << y_col << " vs " << x_col << "</text>\n";
    for (const auto& [key, idx] : groups) {
        os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
        bool first = true;
        for (std::size_t i : idx) {
            if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]))
                continue;
            std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", first ? "" : " ", px(xs[i]), py(ys[i]));
            os << buf;
            first = false;
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

} // namespace pdmosc::cli
