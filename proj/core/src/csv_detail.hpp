#pragma once

// Minimal RFC 4180 reader/writer shared by segment input and export/import.

#include <string>
#include <string_view>
#include <vector>

namespace addrparse::detail {

struct CsvRow {
    std::vector<std::string> cells;
    std::size_t start_line = 0;  // 1-based
    std::size_t end_line = 0;
};

inline std::vector<CsvRow> parse_csv(std::string_view text) {
    std::vector<CsvRow> rows;
    CsvRow row;
    std::string cell;
    bool quoted = false;
    bool row_started = false;
    std::size_t line = 1;
    row.start_line = 1;

    const auto end_cell = [&] {
        row.cells.push_back(cell);
        cell.clear();
    };
    const auto end_row = [&] {
        if (row_started || !row.cells.empty() || !cell.empty()) {
            end_cell();
            row.end_line = line;
            rows.push_back(std::move(row));
        }
        row = CsvRow{};
        row.start_line = line + 1;
        row_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                cell.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                quoted = true;
                row_started = true;
                break;
            case ',':
                end_cell();
                row_started = true;
                break;
            case '\r':
                break;
            case '\n':
                end_row();
                ++line;
                row.start_line = line;
                break;
            default:
                cell.push_back(c);
                row_started = true;
                break;
        }
    }
    end_row();
    return rows;
}

inline std::string csv_escape(std::string_view value) {
    const bool needs_quotes =
        value.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(value);
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace addrparse::detail
