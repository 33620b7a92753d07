#pragma once
// The plant record schema and its controlled vocabularies.

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "phytobase/error.hpp"
#include "phytobase/conservation.hpp"
#include "phytobase/language.hpp"
#include "phytobase/media.hpp"

namespace phytobase {

// ---- names ---------------------------------------------------------------

struct CanonicalName {
    std::string genus;
    std::string epithet;
    std::optional<std::string> authority;
    std::string raw;

    // "Genus epithet [authority]"
    std::string rendered() const;

    friend bool operator==(const CanonicalName&, const CanonicalName&) = default;
};

// Genus is the first token, epithet the second (must already be lowercase
// Latin letters or hyphens), anything after is the authority verbatim.
// Throws Error(EmptyName) or Error(MalformedName).
CanonicalName parse_scientific_name(std::string_view raw);

// "genus-epithet", lowercase ASCII.
std::string make_slug(const CanonicalName& name);

struct LocalizedName {
    std::string text;
    LanguageTag language{"yo"};

    friend bool operator==(const LocalizedName&, const LocalizedName&) = default;
};

// ---- ailment codes -------------------------------------------------------

struct AilmentCode {
    std::string code;
    std::string full_name;

    friend bool operator==(const AilmentCode&, const AilmentCode&) = default;
};

bool is_well_formed_code(std::string_view code);

// code -> full name. The twenty built-in codes are always present; more
// can be registered per corpus as long as code <-> name stays one-to-one.
class CodeTable {
public:
    static const CodeTable& builtin();

    // Throws Error(BadRequest) on a malformed code, a conflicting redefinition,
    // or a full name already used by another code.
    void add(std::string_view code, std::string_view full_name);
    bool contains(std::string_view code) const;
    bool is_builtin(std::string_view code) const;
    // Uppercases the input. Throws Error(UnknownCode).
    AilmentCode resolve(std::string_view code) const;

    const std::map<std::string, std::string>& entries() const noexcept { return entries_; }
    std::map<std::string, std::string> custom_entries() const;

    friend bool operator==(const CodeTable&, const CodeTable&) = default;

private:
    std::map<std::string, std::string> entries_;
};

AilmentCode resolve_ailment_code(std::string_view code, const CodeTable& table = CodeTable::builtin());

// ---- plant parts ---------------------------------------------------------

enum class PartKind { Root, Leaf, Stem, Rhizome, Seed, Fruit, Bark, Flower, Tuber, Frond, Exudate, WholePlant, Other };

struct PlantPart {
    PartKind kind = PartKind::Other;
    std::string other;  // only for PartKind::Other

    static PlantPart of(PartKind k) { return {k, {}}; }

    friend auto operator<=>(const PlantPart&, const PlantPart&) = default;
};

// Token used in serialized data: "Root", ..., "WholePlant", or the Other text.
std::string to_string(const PlantPart& part);
// Human caption: "Root", ..., "Whole plant".
std::string display_name(const PlantPart& part);
// Singular/plural, case-insensitive; unknown text becomes Other.
// Throws Error(BadRequest) on blank input.
PlantPart parse_plant_part(std::string_view s);
// True when `s` parses to a named (non-Other) part.
bool names_known_part(std::string_view s);
// True when some word of `s` names a part ("root decoction" -> true).
bool mentions_part(std::string_view s);

// ---- record --------------------------------------------------------------

struct UseEntry {
    std::string ailment;  // code, resolved through the corpus CodeTable
    std::set<PlantPart> parts_used;
    std::optional<std::string> preparation;
    std::optional<std::string> dosage;

    friend bool operator==(const UseEntry&, const UseEntry&) = default;
};

struct DrugInteraction {
    std::string agent;
    std::string effect;
    std::optional<std::string> severity_note;

    friend bool operator==(const DrugInteraction&, const DrugInteraction&) = default;
};

struct PlantRecord {
    std::string id;
    std::string scientific_name;  // raw; parse_scientific_name gives the structure
    std::string family;
    std::vector<std::string> common_names;
    std::vector<std::string> synonyms;
    std::vector<LocalizedName> local_names;
    std::string description;
    std::vector<UseEntry> uses;
    std::vector<std::string> areas_of_origin;
    std::vector<std::string> contraindications;
    std::vector<std::string> phytoconstituents;
    std::vector<std::string> adverse_reactions;
    std::optional<std::string> toxicity;
    std::optional<std::string> pharmacology;
    std::vector<DrugInteraction> drug_interactions;
    MediaManifest media;
    std::vector<std::string> sources;
    // Several assessments may exist for one plant (repeated survey rows).
    std::vector<ConservationAssessment> conservation;
    std::optional<MarketStatus> market_status;

    friend bool operator==(const PlantRecord&, const PlantRecord&) = default;
};

// Ailment codes in use order, first occurrence only.
std::vector<std::string> ailment_codes(const PlantRecord& r);
// Union of parts across all uses, in PlantPart order.
std::set<PlantPart> parts_used(const PlantRecord& r);

}  // namespace phytobase
