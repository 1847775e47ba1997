#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tslice/error.hpp"
#include "tslice/rational.hpp"

namespace tslice {

using Cell = std::variant<std::string, long long, Rational>;

struct Section {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// One command's complete output: a group header plus one or more tables.
struct Doc {
    std::string group_label;
    std::string command;
    std::vector<Section> sections;
};

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name); // "text" | "json" | "csv"
std::string render(const Doc& doc, Format fmt);

} // namespace tslice
