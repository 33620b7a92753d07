#include "phytobase/record.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "phytobase/error.hpp"
#include "phytobase/text.hpp"

namespace phytobase {

// ---- names ---------------------------------------------------------------

std::string CanonicalName::rendered() const {
    std::string out = genus + " " + epithet;
    if (authority) out += " " + *authority;
    return out;
}

CanonicalName parse_scientific_name(std::string_view raw) {
    if (text::is_blank(raw)) throw Error(ErrorCode::EmptyName, "scientific name is empty");

    std::vector<std::string> tokens;
    std::istringstream in{std::string(raw)};
    for (std::string tok; in >> tok;) tokens.push_back(tok);

    if (tokens.size() < 2)
        throw Error(ErrorCode::MalformedName, "scientific name needs a genus and an epithet: '" + std::string(raw) + "'");
    const auto& genus = tokens[0];
    if (genus[0] < 'A' || genus[0] > 'Z')
        throw Error(ErrorCode::MalformedName, "genus must start with an uppercase letter: '" + genus + "'");
    const auto& epithet = tokens[1];
    bool has_letter = false;
    for (char c : epithet) {
        if (c >= 'a' && c <= 'z') {
            has_letter = true;
        } else if (c != '-') {
            throw Error(ErrorCode::MalformedName, "epithet must be lowercase Latin letters: '" + epithet + "'");
        }
    }
    if (!has_letter) throw Error(ErrorCode::MalformedName, "epithet has no letters: '" + epithet + "'");

    CanonicalName name{genus, epithet, std::nullopt, std::string(raw)};
    if (tokens.size() > 2) {
        std::vector<std::string> rest(tokens.begin() + 2, tokens.end());
        name.authority = text::join(rest, " ");
    }
    return name;
}

std::string make_slug(const CanonicalName& name) {
    std::string slug;
    for (char c : text::to_lower(name.genus + "-" + name.epithet)) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
        slug += ok ? c : '-';
    }
    return slug;
}

// ---- ailment codes -------------------------------------------------------

namespace {

const std::array<std::pair<const char*, const char*>, 20> kBuiltinCodes{{
    {"ANA", "Anaemia"},
    {"AST", "Asthma"},
    {"CAN", "Cancer"},
    {"DMT", "Dermatitis"},
    {"DYS", "Dysmenorrhoea"},
    {"EPL", "Epilepsy"},
    {"EYE", "Eye pain"},
    {"GNO", "Gonorrhoea"},
    {"HEP", "Hepatitis"},
    {"IMP", "Impotence"},
    {"INF", "Infertility"},
    {"PIL", "Piles"},
    {"LEP", "Leprosy"},
    {"MI", "Male Infertility"},
    {"OBE", "Obesity"},
    {"OED", "Oedema"},
    {"RIC", "Rickets"},
    {"STR", "Stroke"},
    {"URT", "Urinary Tract Infections"},
    {"WI", "Women Infertility"},
}};

}  // namespace

bool is_well_formed_code(std::string_view code) {
    if (code.size() < 2 || code.size() > 4) return false;
    for (char c : code)
        if (c < 'A' || c > 'Z') return false;
    return true;
}

const CodeTable& CodeTable::builtin() {
    static const CodeTable table = [] {
        CodeTable t;
        for (const auto& [code, name] : kBuiltinCodes) t.entries_.emplace(code, name);
        return t;
    }();
    return table;
}

void CodeTable::add(std::string_view raw_code, std::string_view raw_name) {
    auto code = text::to_upper(text::trim(raw_code));
    std::string name(text::trim(raw_name));
    if (!is_well_formed_code(code))
        throw Error(ErrorCode::BadRequest, "ailment code must be 2-4 letters: '" + std::string(raw_code) + "'");
    if (name.empty()) throw Error(ErrorCode::BadRequest, "ailment code " + code + " needs a full name");
    if (auto it = entries_.find(code); it != entries_.end()) {
        if (it->second == name) return;
        throw Error(ErrorCode::BadRequest, "ailment code " + code + " is already defined as '" + it->second + "'");
    }
    for (const auto& [other, other_name] : entries_)
        if (other_name == name)
            throw Error(ErrorCode::BadRequest, "full name '" + name + "' already belongs to " + other);
    entries_.emplace(code, name);
}

bool CodeTable::contains(std::string_view code) const { return entries_.count(text::to_upper(code)) != 0; }

bool CodeTable::is_builtin(std::string_view code) const {
    return builtin().entries_.count(text::to_upper(code)) != 0;
}

AilmentCode CodeTable::resolve(std::string_view raw) const {
    auto code = text::to_upper(text::trim(raw));
    auto it = entries_.find(code);
    if (it == entries_.end()) throw Error(ErrorCode::UnknownCode, "unknown ailment code '" + std::string(raw) + "'");
    return {it->first, it->second};
}

std::map<std::string, std::string> CodeTable::custom_entries() const {
    std::map<std::string, std::string> out;
    for (const auto& [code, name] : entries_)
        if (!is_builtin(code)) out.emplace(code, name);
    return out;
}

AilmentCode resolve_ailment_code(std::string_view code, const CodeTable& table) { return table.resolve(code); }

// ---- plant parts ---------------------------------------------------------

namespace {

struct PartName {
    PartKind kind;
    const char* token;
    const char* caption;
    const char* singular;
    const char* plural;
};

const std::array<PartName, 12> kParts{{
    {PartKind::Root, "Root", "Root", "root", "roots"},
    {PartKind::Leaf, "Leaf", "Leaf", "leaf", "leaves"},
    {PartKind::Stem, "Stem", "Stem", "stem", "stems"},
    {PartKind::Rhizome, "Rhizome", "Rhizome", "rhizome", "rhizomes"},
    {PartKind::Seed, "Seed", "Seed", "seed", "seeds"},
    {PartKind::Fruit, "Fruit", "Fruit", "fruit", "fruits"},
    {PartKind::Bark, "Bark", "Bark", "bark", "barks"},
    {PartKind::Flower, "Flower", "Flower", "flower", "flowers"},
    {PartKind::Tuber, "Tuber", "Tuber", "tuber", "tubers"},
    {PartKind::Frond, "Frond", "Frond", "frond", "fronds"},
    {PartKind::Exudate, "Exudate", "Exudate", "exudate", "exudates"},
    {PartKind::WholePlant, "WholePlant", "Whole plant", "wholeplant", "wholeplants"},
}};

std::optional<PartKind> lookup_part(std::string_view s) {
    std::string key;
    for (char c : text::to_lower(text::trim(s)))
        if (c != ' ' && c != '-' && c != '_' && c != '.') key += c;
    for (const auto& p : kParts)
        if (key == p.singular || key == p.plural) return p.kind;
    return std::nullopt;
}

}  // namespace

std::string to_string(const PlantPart& part) {
    if (part.kind == PartKind::Other) return part.other;
    return kParts[static_cast<std::size_t>(part.kind)].token;
}

std::string display_name(const PlantPart& part) {
    if (part.kind == PartKind::Other) return part.other;
    return kParts[static_cast<std::size_t>(part.kind)].caption;
}

PlantPart parse_plant_part(std::string_view s) {
    auto trimmed = text::trim(s);
    if (trimmed.empty()) throw Error(ErrorCode::BadRequest, "plant part is empty");
    if (auto kind = lookup_part(trimmed)) return PlantPart::of(*kind);
    return {PartKind::Other, std::string(trimmed)};
}

bool names_known_part(std::string_view s) { return lookup_part(s).has_value(); }

bool mentions_part(std::string_view s) {
    auto lower = text::to_lower(s);
    if (lower.find("whole plant") != std::string::npos) return true;
    std::string word;
    for (std::size_t i = 0; i <= lower.size(); ++i) {
        char c = i < lower.size() ? lower[i] : ' ';
        if (c >= 'a' && c <= 'z') {
            word += c;
        } else {
            if (!word.empty() && lookup_part(word)) return true;
            word.clear();
        }
    }
    return false;
}

// ---- record helpers ------------------------------------------------------

std::vector<std::string> ailment_codes(const PlantRecord& r) {
    std::vector<std::string> out;
    for (const auto& use : r.uses) {
        auto code = text::to_upper(use.ailment);
        if (std::find(out.begin(), out.end(), code) == out.end()) out.push_back(code);
    }
    return out;
}

std::set<PlantPart> parts_used(const PlantRecord& r) {
    std::set<PlantPart> out;
    for (const auto& use : r.uses) out.insert(use.parts_used.begin(), use.parts_used.end());
    return out;
}

}  // namespace phytobase
