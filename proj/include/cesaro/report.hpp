#ifndef CESARO_REPORT_HPP
#define CESARO_REPORT_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cesaro
{

using Cell = std::variant<double, long long, std::string>;

// Tabular experiment record with named pass/fail verdicts.
struct ExperimentReport {
    std::string experiment;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    std::vector<std::pair<std::string, bool>> verdicts;
    std::vector<std::string> notes;

    void add_row(std::vector<Cell> row);
    void set_verdict(const std::string &name, bool pass);
    std::optional<bool> verdict(const std::string &name) const;
    bool passed() const;

    std::size_t column_index(const std::string &name) const;
    // Numeric cell; throws if the cell holds a string.
    double number(std::size_t row, const std::string &column) const;

    std::string to_csv() const;
    nlohmann::ordered_json to_json() const;
};

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

} // namespace cesaro

#endif
