#pragma once
// Language tags for localized names and narration.

#include <set>
#include <string>
#include <string_view>

#include "phytobase/error.hpp"

namespace phytobase {

// Lowercase two-letter language code ("en", "yo", ...).
class LanguageTag {
public:
    LanguageTag() = default;
    // Throws Error(UnknownLanguage) when `code` is not two ASCII lowercase letters.
    explicit LanguageTag(std::string_view code);

    const std::string& code() const noexcept { return code_; }

    friend auto operator<=>(const LanguageTag&, const LanguageTag&) = default;

private:
    std::string code_ = "en";
};

bool is_well_formed_language_code(std::string_view code);

class LanguageRegistry {
public:
    // en, yo, ha, ig, fr
    static const LanguageRegistry& bundled();

    // Throws Error(BadRequest) on a duplicate tag.
    void add(const LanguageTag& tag);
    bool contains(const LanguageTag& tag) const { return tags_.count(tag) != 0; }
    bool contains(std::string_view code) const;
    const std::set<LanguageTag>& tags() const noexcept { return tags_; }

private:
    std::set<LanguageTag> tags_;
};

}  // namespace phytobase
