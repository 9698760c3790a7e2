#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace logsine::cli {

enum class Format { plain, json, csv };

Format parse_format(std::string_view name);

/// Rows are flat JSON objects sharing one key order. `json` prints the array as
/// one document; `csv` prints a header plus RFC 4180 records; `plain` prints one
/// space-separated line per row, with booleans shown as PASS/FAIL.
void render(std::ostream& out, const nlohmann::ordered_json& rows, Format format);

std::string format_number(double value);

} // namespace logsine::cli
