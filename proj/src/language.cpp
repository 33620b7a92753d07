#include "phytobase/language.hpp"

#include "phytobase/error.hpp"

namespace phytobase {

bool is_well_formed_language_code(std::string_view code) {
    return code.size() == 2 && code[0] >= 'a' && code[0] <= 'z' && code[1] >= 'a' && code[1] <= 'z';
}

LanguageTag::LanguageTag(std::string_view code) : code_(code) {
    if (!is_well_formed_language_code(code))
        throw Error(ErrorCode::UnknownLanguage, "malformed language tag '" + std::string(code) + "'");
}

const LanguageRegistry& LanguageRegistry::bundled() {
    static const LanguageRegistry reg = [] {
        LanguageRegistry r;
        for (auto code : {"en", "yo", "ha", "ig", "fr"}) r.add(LanguageTag(code));
        return r;
    }();
    return reg;
}

void LanguageRegistry::add(const LanguageTag& tag) {
    if (!tags_.insert(tag).second)
        throw Error(ErrorCode::BadRequest, "language '" + tag.code() + "' already registered");
}

bool LanguageRegistry::contains(std::string_view code) const {
    if (!is_well_formed_language_code(code)) return false;
    return contains(LanguageTag(code));
}

}  // namespace phytobase
