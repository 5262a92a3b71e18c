#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace diracwell::cli {

using Cell = std::variant<long long, double, std::string>;

/// Column-ordered table written as CSV (17 significant digits, '.' decimal
/// separator regardless of locale) or as a JSON array of row objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
    std::string to_csv() const;
    nlohmann::ordered_json to_json() const;
};

std::string format_double(double v);

/// Writes via a temporary sibling and rename.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

} // namespace diracwell::cli
