#include "cesaro/report.hpp"

#include "cesaro/series.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cesaro
{

namespace
{

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell &cell)
{
    if (const auto *d = std::get_if<double>(&cell)) {
        return format_double(*d);
    }
    if (const auto *i = std::get_if<long long>(&cell)) {
        return std::to_string(*i);
    }
    return std::get<std::string>(cell);
}

} // namespace

std::string format_double(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) {
            break;
        }
    }
    return buf;
}

void ExperimentReport::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size()) {
        throw Error("report row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

void ExperimentReport::set_verdict(const std::string &name, bool pass)
{
    for (auto &[n, v] : verdicts) {
        if (n == name) {
            v = pass;
            return;
        }
    }
    verdicts.emplace_back(name, pass);
}

std::optional<bool> ExperimentReport::verdict(const std::string &name) const
{
    for (const auto &[n, v] : verdicts) {
        if (n == name) {
            return v;
        }
    }
    return std::nullopt;
}

bool ExperimentReport::passed() const
{
    for (const auto &[n, v] : verdicts) {
        if (!v) {
            return false;
        }
    }
    return true;
}

std::size_t ExperimentReport::column_index(const std::string &name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw Error("report has no column '" + name + "'");
}

double ExperimentReport::number(std::size_t row, const std::string &column) const
{
    const Cell &cell = rows.at(row).at(column_index(column));
    if (const auto *d = std::get_if<double>(&cell)) {
        return *d;
    }
    if (const auto *i = std::get_if<long long>(&cell)) {
        return static_cast<double>(*i);
    }
    throw Error("report cell '" + column + "' is not numeric");
}

std::string ExperimentReport::to_csv() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << csv_escape(columns[i]);
    }
    out << '\n';
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_escape(cell_text(row[i]));
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json ExperimentReport::to_json() const
{
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["config"] = config;
    auto &out_rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](const auto &v) { r[columns[i]] = v; }, row[i]);
        }
        out_rows.push_back(std::move(r));
    }
    j["summary"] = summary;
    auto &v = j["verdicts"] = nlohmann::ordered_json::object();
    for (const auto &[name, pass] : verdicts) {
        v[name] = pass;
    }
    j["passed"] = passed();
    j["notes"] = notes;
    return j;
}

} // namespace cesaro
