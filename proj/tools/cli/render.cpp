#include "render.hpp"

#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace logsine::cli {

Format parse_format(std::string_view name) {
    if (name == "plain") return Format::plain;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

namespace {

std::string cell_text(const nlohmann::ordered_json& cell, Format format) {
    switch (cell.type()) {
    case nlohmann::json::value_t::string: return cell.get<std::string>();
    case nlohmann::json::value_t::boolean:
        if (format == Format::plain) return cell.get<bool>() ? "PASS" : "FAIL";
        return cell.get<bool>() ? "true" : "false";
    case nlohmann::json::value_t::number_float: return format_number(cell.get<double>());
    case nlohmann::json::value_t::null: return format == Format::plain ? "-" : "";
    default: return cell.dump();
    }
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

void render(std::ostream& out, const nlohmann::ordered_json& rows, Format format) {
    if (format == Format::json) {
        out << rows.dump(2) << '\n';
        return;
    }
    if (format == Format::csv && !rows.empty()) {
        bool first = true;
        for (const auto& item : rows.front().items()) {
            out << (first ? "" : ",") << csv_field(item.key());
            first = false;
        }
        out << "\r\n";
    }
    for (const auto& row : rows) {
        bool first = true;
        for (const auto& item : row.items()) {
            const std::string text = cell_text(item.value(), format);
            if (format == Format::csv) {
                out << (first ? "" : ",") << csv_field(text);
            } else {
                out << (first ? "" : " ") << text;
            }
            first = false;
        }
        out << (format == Format::csv ? "\r\n" : "\n");
    }
}

} // namespace logsine::cli
