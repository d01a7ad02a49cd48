#pragma once

#include <string>
#include <vector>

namespace ytcc::csv {

/// RFC-4180 rows: quoted fields may contain commas, quotes ("" escape)
/// and newlines. Rows are 1-based, counting the header.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Table read_file(const std::string& path);
Table read_string(const std::string& text, const std::string& origin = "<string>");

std::string escape(const std::string& field, bool force_quote = false);
std::string join_row(const std::vector<std::string>& fields);

}  // namespace ytcc::csv
