#pragma once
// Error type shared by every phytobase module.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace phytobase {

enum class ErrorCode {
    EmptyName,
    MalformedName,
    UnknownCode,
    InvalidRecord,
    StoreUnavailable,
    NotFound,
    MalformedSource,
    LexError,
    ParseError,
    UnknownField,
    AllZero,
    UnknownLanguage,
    EmptyCriteria,
    CorruptSnapshot,
    BindFailure,
    ReadOnly,
    BadRequest,
};

std::string_view to_string(ErrorCode code);

// Half-open byte range [start, end) into some source text.
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<Span> span = std::nullopt)
        : std::runtime_error(message), code_(code), span_(span) {}

    ErrorCode code() const noexcept { return code_; }
    const std::optional<Span>& span() const noexcept { return span_; }

private:
    ErrorCode code_;
    std::optional<Span> span_;
};

}  // namespace phytobase
