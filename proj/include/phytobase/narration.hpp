#pragma once
// Narration scripts (the text handed to a speech engine) and media
// manifests for one record. Labels are localized; field content is
// passed through untranslated.

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "phytobase/language.hpp"
#include "phytobase/media.hpp"
#include "phytobase/record.hpp"

namespace phytobase {

// Narration order.
enum class Segment { Name, Family, Description, Uses, Parts, Preparations, Contraindications, Toxicity, Interactions };

inline constexpr std::size_t kSegmentCount = 9;
inline constexpr std::array<Segment, kSegmentCount> kSegments{
    Segment::Name,         Segment::Family,           Segment::Description,
    Segment::Uses,         Segment::Parts,            Segment::Preparations,
    Segment::Contraindications, Segment::Toxicity,    Segment::Interactions};

// Catalog key: name, family, description, uses, parts, preparations,
// contraindications, toxicity, interactions.
std::string_view segment_key(Segment s);

class LabelCatalog {
public:
    using Labels = std::array<std::string, kSegmentCount>;

    // Built-in captions for en, yo, ha, ig, fr.
    static const LabelCatalog& bundled();

    // Parses "key = caption" lines ('#' comments, blank lines ignored).
    // Every one of the nine keys must appear exactly once. Throws Error(BadRequest).
    static Labels parse(std::string_view document);
    static std::string format(const Labels& labels);

    void set(const LanguageTag& lang, Labels labels) { labels_[lang] = std::move(labels); }
    // Loads every "<tag>.labels" file in `dir`, overriding bundled entries.
    void load_directory(const std::filesystem::path& dir);
    // Throws Error(UnknownLanguage).
    const std::string& label(const LanguageTag& lang, Segment s) const;
    bool has(const LanguageTag& lang) const { return labels_.count(lang) != 0; }
    // Throws Error(BadRequest) naming the first language in `registry`
    // without a complete set of labels.
    void check_complete(const LanguageRegistry& registry) const;

private:
    std::map<LanguageTag, Labels> labels_;
};

struct NarrationSegment {
    Segment segment;
    std::string label;
    std::string body;  // never empty

    friend bool operator==(const NarrationSegment&, const NarrationSegment&) = default;
};

struct NarrationScript {
    LanguageTag language;
    std::vector<NarrationSegment> segments;
    std::string record_id;
    std::uint64_t record_revision = 0;

    friend bool operator==(const NarrationScript&, const NarrationScript&) = default;
};

struct NarrationContext {
    const CodeTable& codes = CodeTable::builtin();
    const LabelCatalog& catalog = LabelCatalog::bundled();
    const LanguageRegistry* languages = nullptr;  // defaults to the bundled registry
};

// Throws Error(UnknownLanguage) for an unregistered tag and
// Error(UnknownCode) for a use whose code the table lacks.
NarrationScript build_narration(const PlantRecord& record, const LanguageTag& language,
                                const NarrationContext& ctx = {}, std::uint64_t revision = 0);

// "Label: body.\n" per segment; the period is omitted when the body
// already ends in '.', '!' or '?'.
std::string render_narration_plaintext(const NarrationScript& script);

// The record's manifest with unusable references dropped (see clean_manifest).
ManifestResult media_manifest(const PlantRecord& record);

}  // namespace phytobase
