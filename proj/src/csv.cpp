#include "ytcc/csv.hpp"

#include <fstream>
#include <sstream>

#include "ytcc/errors.hpp"

namespace ytcc::csv {
namespace {

// Parses one document into rows of fields. Quote state machine; CRLF and
// LF both end a record when outside quotes.
std::vector<std::vector<std::string>> parse(const std::string& text, const std::string& origin) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool at_field_start = true;
    std::size_t line = 1;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        at_field_start = true;
        field_was_quoted = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
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
                if (at_field_start) {
                    in_quotes = true;
                    field_was_quoted = true;
                    at_field_start = false;
                } else if (field_was_quoted) {
                    throw ParseError(origin + " line " + std::to_string(line) +
                                     ": stray data after closing quote");
                } else {
                    field.push_back(c);
                    at_field_start = false;
                }
                break;
            case ',':
                end_field();
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') break;  // handled by \n
                end_row();
                ++line;
                break;
            case '\n':
                end_row();
                ++line;
                break;
            default:
                field.push_back(c);
                at_field_start = false;
                break;
        }
    }
    if (in_quotes) {
        throw ParseError(origin + ": unterminated quoted field at end of file");
    }
    if (!field.empty() || !row.empty()) end_row();
    return rows;
}

}  // namespace

Table read_string(const std::string& text, const std::string& origin) {
    auto rows = parse(text, origin);
    Table t;
    if (rows.empty()) return t;
    t.header = std::move(rows.front());
    t.rows.assign(std::make_move_iterator(rows.begin() + 1), std::make_move_iterator(rows.end()));
    return t;
}

Table read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_string(ss.str(), path);
}

std::string escape(const std::string& field, bool force_quote) {
    const bool needs_quote = force_quote ||
                             field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += escape(fields[i]);
    }
    out.push_back('\n');
    return out;
}

}  // namespace ytcc::csv
