#include "phytobase/error.hpp"

namespace phytobase {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyName: return "EmptyName";
        case ErrorCode::MalformedName: return "MalformedName";
        case ErrorCode::UnknownCode: return "UnknownCode";
        case ErrorCode::InvalidRecord: return "InvalidRecord";
        case ErrorCode::StoreUnavailable: return "StoreUnavailable";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::MalformedSource: return "MalformedSource";
        case ErrorCode::LexError: return "LexError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownField: return "UnknownField";
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::UnknownLanguage: return "UnknownLanguage";
        case ErrorCode::EmptyCriteria: return "EmptyCriteria";
        case ErrorCode::CorruptSnapshot: return "CorruptSnapshot";
        case ErrorCode::BindFailure: return "BindFailure";
        case ErrorCode::ReadOnly: return "ReadOnly";
        case ErrorCode::BadRequest: return "BadRequest";
    }
    return "Unknown";
}

}  // namespace phytobase
