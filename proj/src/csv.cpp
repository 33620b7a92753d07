#include "phytobase/csv.hpp"

#include "phytobase/error.hpp"

namespace phytobase::csv {

std::vector<Row> parse(std::string_view doc) {
    if (doc.substr(0, 3) == "\xEF\xBB\xBF") doc.remove_prefix(3);

    std::vector<Row> rows;
    Row row;
    std::string field;
    std::size_t line = 1;
    row.line = line;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool row_has_content = false;

    auto end_field = [&] {
        row.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
    };
    auto end_row = [&] {
        end_field();
        if (row_has_content) rows.push_back(std::move(row));
        row = Row{};
        row_has_content = false;
    };

    for (std::size_t i = 0; i < doc.size(); ++i) {
        char c = doc[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < doc.size() && doc[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty() || field_was_quoted)
                    throw Error(ErrorCode::MalformedSource, "line " + std::to_string(line) + ": stray quote");
                in_quotes = true;
                field_was_quoted = true;
                row_has_content = true;
                break;
            case ',':
                end_field();
                row_has_content = true;
                break;
            case '\r':
                if (i + 1 < doc.size() && doc[i + 1] == '\n') ++i;
                [[fallthrough]];
            case '\n':
                end_row();
                row.line = ++line;
                break;
            default:
                if (field_was_quoted)
                    throw Error(ErrorCode::MalformedSource,
                                "line " + std::to_string(line) + ": text after closing quote");
                field += c;
                row_has_content = true;
        }
    }
    if (in_quotes) throw Error(ErrorCode::MalformedSource, "unterminated quoted field");
    end_row();
    return rows;
}

std::string quote(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += quote(fields[i]);
    }
    out += "\r\n";
    return out;
}

}  // namespace phytobase::csv
