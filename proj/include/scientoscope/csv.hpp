#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace scientoscope::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0; // 1-based line the record starts on

    const std::string& at(std::size_t i) const;
    std::size_t size() const { return fields.size(); }
};

// RFC 4180 table: header row plus records. Quoted fields may contain
// commas, doubled quotes and newlines.
struct Table {
    std::string path;
    std::vector<std::string> header;
    std::vector<Row> rows;

    // Column index by header name; throws ValidationError if absent.
    std::size_t column(const std::string& name) const;
    // -1 if absent.
    int find_column(const std::string& name) const;
};

Table read_file(const std::string& path);
Table parse(const std::string& text, const std::string& path_for_errors);

std::string escape_field(const std::string& field);
std::string format_row(const std::vector<std::string>& fields);

// Writes header + rows with "\n" line endings, creating parent directories.
void write_file(const std::string& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

} // namespace scientoscope::csv
