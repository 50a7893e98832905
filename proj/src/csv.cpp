#include "scientoscope/csv.hpp"
#include "scientoscope/error.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace scientoscope::csv {

const std::string& Row::at(std::size_t i) const {
    if (i >= fields.size())
        throw ValidationError("row starting at line " + std::to_string(line) +
                              ": missing field " + std::to_string(i + 1));
    return fields[i];
}

std::size_t Table::column(const std::string& name) const {
    int idx = find_column(name);
    if (idx < 0)
        throw ValidationError(path + ": required column \"" + name + "\" not found in header");
    return static_cast<std::size_t>(idx);
}

int Table::find_column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

Table parse(const std::string& text, const std::string& path_for_errors) {
    Table table;
    table.path = path_for_errors;

    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    std::size_t line = 1;
    std::size_t record_line = 1;
    bool any_char_in_record = false;

    auto end_field = [&]() {
        fields.push_back(field);
        field.clear();
        field_was_quoted = false;
    };
    auto end_record = [&]() {
        end_field();
        if (table.header.empty()) {
            table.header = fields;
        } else {
            Row row;
            row.fields = fields;
            row.line = record_line;
            if (row.fields.size() != table.header.size())
                throw ValidationError(file_context(path_for_errors, record_line) + ": expected " +
                                      std::to_string(table.header.size()) + " fields, got " +
                                      std::to_string(row.fields.size()));
            table.rows.push_back(std::move(row));
        }
        fields.clear();
        any_char_in_record = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!field.empty() || field_was_quoted)
                throw ValidationError(file_context(path_for_errors, line, fields.size() + 1) +
                                      ": quote inside unquoted field");
            in_quotes = true;
            field_was_quoted = true;
            any_char_in_record = true;
            break;
        case ',':
            end_field();
            any_char_in_record = true;
            break;
        case '\r':
            break; // CRLF handled at the '\n'
        case '\n':
            if (any_char_in_record || !fields.empty() || !field.empty()) end_record();
            ++line;
            record_line = line;
            break;
        default:
            field.push_back(c);
            any_char_in_record = true;
            break;
        }
    }
    if (in_quotes)
        throw ValidationError(file_context(path_for_errors, record_line) + ": unterminated quoted field");
    if (any_char_in_record || !fields.empty() || !field.empty()) end_record();

    if (table.header.empty())
        throw ValidationError(path_for_errors + ": missing header row (empty file)");
    return table;
}

Table read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

std::string escape_field(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string format_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += escape_field(fields[i]);
    }
    return out;
}

void write_file(const std::string& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << format_row(header) << "\n";
    for (const auto& row : rows) out << format_row(row) << "\n";
}

} // namespace scientoscope::csv
