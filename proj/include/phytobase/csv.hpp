#pragma once
// RFC 4180 CSV reading and writing.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace phytobase::csv {

struct Row {
    std::size_t line = 0;  // 1-based physical line where the row starts
    std::vector<std::string> fields;
};

// Accepts CRLF or LF line ends and a leading UTF-8 BOM. Blank lines are
// skipped. Throws Error(MalformedSource) on an unterminated quoted field or
// a quote inside an unquoted field.
std::vector<Row> parse(std::string_view document);

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string quote(std::string_view field);
// One row terminated by CRLF.
std::string format_row(const std::vector<std::string>& fields);

}  // namespace phytobase::csv
