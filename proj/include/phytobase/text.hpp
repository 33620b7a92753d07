#pragma once
// Small string helpers. Case folding is ASCII-only; bytes >= 0x80 pass
// through untouched so UTF-8 diacritics survive lowercasing.

#include <string>
#include <string_view>
#include <vector>

namespace phytobase::text {

std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
// Case-insensitive substring test; an empty needle always matches.
bool icontains(std::string_view haystack, std::string_view needle);

std::string_view trim(std::string_view s);
bool is_blank(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool is_valid_utf8(std::string_view s);

// Splits on whitespace, commas and hyphens, lowercases, drops empty pieces.
std::vector<std::string> name_tokens(std::string_view s);

// Backslash-escapes every character of `specials` plus the backslash itself.
std::string escape(std::string_view s, std::string_view specials);
// Splits on `sep`, honouring backslash escapes, and unescapes each piece.
std::vector<std::string> split_escaped(std::string_view s, char sep);
std::string unescape(std::string_view s);
// Splits on unescaped `sep` into at most `max_pieces` pieces, leaving escapes intact.
std::vector<std::string> split_raw(std::string_view s, char sep, std::size_t max_pieces);

}  // namespace phytobase::text
