#include <array>

#include "phytobase/pql.hpp"
#include "phytobase/text.hpp"

namespace phytobase::pql {

namespace {

constexpr std::array<std::string_view, 13> kKeywords{"SELECT", "FROM", "WHERE", "AND", "OR",  "NOT", "CONTAINS",
                                                     "IN",     "ORDER", "BY",   "ASC", "DESC", "LIMIT"};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<Token> tokenize(std::string_view in) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < in.size()) {
        char c = in[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (ident_start(c)) {
            while (i < in.size() && ident_char(in[i])) ++i;
            std::string word(in.substr(start, i - start));
            auto upper = text::to_upper(word);
            bool keyword = false;
            for (auto kw : kKeywords) keyword = keyword || upper == kw;
            if (keyword)
                out.push_back({TokenKind::Keyword, word, {start, i}, upper});
            else
                out.push_back({TokenKind::Identifier, word, {start, i}, word});
        } else if (digit(c)) {
            while (i < in.size() && digit(in[i])) ++i;
            std::string digits(in.substr(start, i - start));
            out.push_back({TokenKind::Integer, digits, {start, i}, digits});
        } else if (c == '\'' || c == '"') {
            std::string value;
            ++i;
            bool closed = false;
            while (i < in.size()) {
                if (in[i] == '\\' && i + 1 < in.size() && (in[i + 1] == c || in[i + 1] == '\\')) {
                    value += in[i + 1];
                    i += 2;
                } else if (in[i] == c) {
                    ++i;
                    closed = true;
                    break;
                } else {
                    value += in[i++];
                }
            }
            if (!closed) throw Error(ErrorCode::LexError, "unterminated string", Span{start, in.size()});
            out.push_back({TokenKind::String, std::string(in.substr(start, i - start)), {start, i}, value});
        } else if (c == '!' && i + 1 < in.size() && in[i + 1] == '=') {
            i += 2;
            out.push_back({TokenKind::Symbol, "!=", {start, i}, "!="});
        } else if (c == '*' || c == ',' || c == '(' || c == ')' || c == '=') {
            ++i;
            std::string sym(1, c);
            out.push_back({TokenKind::Symbol, sym, {start, i}, sym});
        } else {
            // Report the whole UTF-8 sequence, not just its lead byte.
            ++i;
            while (i < in.size() && (static_cast<unsigned char>(in[i]) & 0xC0) == 0x80) ++i;
            throw Error(ErrorCode::LexError, "illegal character '" + std::string(in.substr(start, i - start)) + "'",
                        Span{start, i});
        }
    }
    return out;
}

}  // namespace phytobase::pql
