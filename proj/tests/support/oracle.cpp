#include "support/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace oracle {

using namespace phytobase;
using namespace phytobase::pql;

std::optional<PaperStatus> plurality(double e, double t, double r, double c) {
    if (e == 0 && t == 0 && r == 0 && c == 0) return std::nullopt;
    // Scanning from most to least severe with a strict comparison keeps the
    // more severe category on ties.
    const std::pair<double, PaperStatus> shares[] = {
        {e, PaperStatus::Endangered}, {t, PaperStatus::Threatened}, {r, PaperStatus::Rare}, {c, PaperStatus::Common}};
    auto best = shares[0];
    for (const auto& s : shares)
        if (s.first > best.first) best = s;
    return best.second;
}

namespace {

std::string lower(std::string s) {
    for (auto& ch : s)
        if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
    return s;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

const std::map<std::string, std::string>& part_words() {
    static const std::map<std::string, std::string> m{
        {"root", "root"},       {"roots", "root"},       {"leaf", "leaf"},         {"leaves", "leaf"},
        {"stem", "stem"},       {"stems", "stem"},       {"rhizome", "rhizome"},   {"rhizomes", "rhizome"},
        {"bark", "bark"},       {"barks", "bark"},       {"whole plant", "whole"}, {"whole plants", "whole"},
        {"wholeplant", "whole"}};
    return m;
}

const std::map<std::string, std::string>& status_words() {
    static const std::map<std::string, std::string> m{
        {"endangered", "en"}, {"e", "en"},      {"threatened", "th"}, {"rare", "ra"},       {"common", "co"},
        {"available", "co"}, {"vulnerable", "vu"}, {"v", "vu"},     {"extinct", "ex"}, {"almostextinct", "ae"},
        {"almost extinct", "ae"}};
    return m;
}

const std::map<std::string, std::string>& market_words() {
    static const std::map<std::string, std::string> m{{"d", "d"}, {"decreased", "d"}, {"i", "i"},
                                                      {"increased", "i"}, {"p", "p"}, {"persistent", "p"}};
    return m;
}

std::string key(Field f, const std::string& v) {
    auto l = lower(v);
    const std::map<std::string, std::string>* table = nullptr;
    if (f == Field::PartUsed) table = &part_words();
    if (f == Field::Status) table = &status_words();
    if (f == Field::MarketStatus) table = &market_words();
    if (table) {
        auto it = table->find(strip(l));
        if (it != table->end()) return "\x01" + it->second;
    }
    return l;
}

std::string status_text(PaperStatus s) {
    switch (s) {
        case PaperStatus::Extinct: return "Extinct";
        case PaperStatus::AlmostExtinct: return "AlmostExtinct";
        case PaperStatus::Endangered: return "Endangered";
        case PaperStatus::Threatened: return "Threatened";
        case PaperStatus::Vulnerable: return "Vulnerable";
        case PaperStatus::Rare: return "Rare";
        case PaperStatus::Available:
        case PaperStatus::Common: return "Common";
    }
    return "";
}

std::string part_text(const PlantPart& p) {
    switch (p.kind) {
        case PartKind::Root: return "Root";
        case PartKind::Leaf: return "Leaf";
        case PartKind::Stem: return "Stem";
        case PartKind::Rhizome: return "Rhizome";
        case PartKind::Bark: return "Bark";
        case PartKind::WholePlant: return "Whole plant";
        case PartKind::Other: return p.other;
        default: return "?";
    }
}

// The generated corpora carry at most one assessment per record.
std::optional<PaperStatus> status_of(const PlantRecord& r) {
    if (r.conservation.empty()) return std::nullopt;
    const auto& a = r.conservation.front();
    if (a.paper_status) return a.paper_status;
    if (!a.opinions) return std::nullopt;
    const auto& o = *a.opinions;
    return plurality(o.endangered_pct, o.threatened_pct, o.rare_pct, o.common_pct);
}

bool contains_ci(const std::string& hay, const std::string& needle) { return lower(hay).find(lower(needle)) != std::string::npos; }

std::string literal_string(const Literal& l) {
    if (auto s = std::get_if<std::string>(&l)) return *s;
    return std::to_string(std::get<std::int64_t>(l));
}

}  // namespace

std::vector<std::string> values(const PlantRecord& r, Field f) {
    std::vector<std::string> out;
    auto push = [&](const std::string& s) {
        if (!strip(s).empty()) out.push_back(strip(s));
    };
    switch (f) {
        case Field::ScientificName: push(r.scientific_name); break;
        case Field::Family: push(r.family); break;
        case Field::CommonName: out = r.common_names; break;
        case Field::Synonym: out = r.synonyms; break;
        case Field::LocalName:
            for (const auto& n : r.local_names) out.push_back(n.text);
            break;
        case Field::Name:
            push(r.scientific_name);
            out.insert(out.end(), r.common_names.begin(), r.common_names.end());
            out.insert(out.end(), r.synonyms.begin(), r.synonyms.end());
            for (const auto& n : r.local_names) out.push_back(n.text);
            break;
        case Field::Ailment:
            for (const auto& u : r.uses) out.push_back(u.ailment);
            break;
        case Field::PartUsed:
            for (const auto& u : r.uses)
                for (const auto& p : u.parts_used) out.push_back(part_text(p));
            break;
        case Field::AreaOfOrigin:
            for (const auto& a : r.areas_of_origin) push(a);
            break;
        case Field::Phytoconstituent: out = r.phytoconstituents; break;
        case Field::Status:
            if (auto s = status_of(r)) out.push_back(status_text(*s));
            break;
        case Field::MarketStatus:
            if (r.market_status) out.push_back(r.market_status == MarketStatus::Decreased   ? "Decreased"
                                               : r.market_status == MarketStatus::Increased ? "Increased"
                                                                                            : "Persistent");
            break;
        case Field::Description: push(r.description); break;
        case Field::Pharmacology:
            if (r.pharmacology) push(*r.pharmacology);
            break;
    }
    return out;
}

bool holds(const Expr& e, const PlantRecord& r) {
    if (auto c = std::get_if<Compare>(&e.node)) {
        auto k = key(c->field, literal_string(c->value));
        bool any = false;
        for (const auto& v : values(r, c->field)) any = any || key(c->field, v) == k;
        return c->op == CompareOp::Eq ? any : !any;
    }
    if (auto c = std::get_if<Contains>(&e.node)) {
        for (const auto& v : values(r, c->field))
            if (contains_ci(v, c->needle)) return true;
        return false;
    }
    if (auto in = std::get_if<In>(&e.node)) {
        for (const auto& lit : in->values)
            for (const auto& v : values(r, in->field))
                if (key(in->field, v) == key(in->field, literal_string(lit))) return true;
        return false;
    }
    if (auto a = std::get_if<And>(&e.node)) {
        for (const auto& c : a->children)
            if (!holds(c, r)) return false;
        return true;
    }
    if (auto o = std::get_if<Or>(&e.node)) {
        for (const auto& c : o->children)
            if (holds(c, r)) return true;
        return false;
    }
    return !holds(*std::get<Not>(e.node).child, r);
}

std::set<std::string> scan(const Expr& e, const std::vector<PlantRecord>& records) {
    std::set<std::string> out;
    for (const auto& r : records)
        if (holds(e, r)) out.insert(r.id);
    return out;
}

}  // namespace oracle
