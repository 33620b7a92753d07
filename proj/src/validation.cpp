#include "phytobase/validation.hpp"

#include <set>

#include "phytobase/error.hpp"
#include "phytobase/text.hpp"

namespace phytobase {

bool ValidationReport::has_error(std::string_view field) const {
    for (const auto& e : errors)
        if (e.field == field) return true;
    return false;
}

bool ValidationReport::has_warning(std::string_view field) const {
    for (const auto& w : warnings)
        if (w.field == field) return true;
    return false;
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& e : errors) out += "error: " + e.field + ": " + e.message + "\n";
    for (const auto& w : warnings) out += "warning: " + w.field + ": " + w.message + "\n";
    return out;
}

namespace {

std::string at(std::string_view field, std::size_t i) { return std::string(field) + "[" + std::to_string(i) + "]"; }

bool valid_id(std::string_view id) {
    for (char c : id) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                  c == '_' || c == '.';
        if (!ok) return false;
    }
    return id != "." && id != "..";
}

void check_text_list(const std::vector<std::string>& values, std::string_view field, ValidationReport& report) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (text::is_blank(values[i])) report.errors.push_back({at(field, i), "empty entry"});
}

void check_uses(const PlantRecord& r, const CodeTable& codes, ValidationReport& report) {
    std::set<std::pair<std::string, std::optional<std::string>>> seen;
    for (std::size_t i = 0; i < r.uses.size(); ++i) {
        const auto& use = r.uses[i];
        auto path = at("uses", i);
        if (!codes.contains(use.ailment))
            report.errors.push_back({path + ".ailment", "unknown ailment code '" + use.ailment + "'"});
        if (!seen.emplace(text::to_upper(use.ailment), use.preparation).second)
            report.errors.push_back({path, "duplicate use entry"});
        for (const auto& part : use.parts_used) {
            if (part.kind != PartKind::Other) continue;
            if (text::is_blank(part.other))
                report.errors.push_back({path + ".parts_used", "free-text part is empty"});
            else if (names_known_part(part.other))
                report.errors.push_back({path + ".parts_used", "free-text part '" + part.other + "' names a known part"});
        }
        if (use.preparation && use.parts_used.empty() && mentions_part(*use.preparation))
            report.errors.push_back({path + ".parts_used", "preparation names a part but parts_used is empty"});
    }
}

void check_conservation(const PlantRecord& r, ValidationReport& report) {
    for (std::size_t i = 0; i < r.conservation.size(); ++i) {
        const auto& a = r.conservation[i];
        auto path = at("conservation", i);
        if (a.assessed_on && !is_iso_date(*a.assessed_on))
            report.errors.push_back({path + ".assessed_on", "expected YYYY-MM-DD"});
        if (!a.opinions) continue;
        const auto& d = *a.opinions;
        bool negative = false;
        for (double v : {d.endangered_pct, d.threatened_pct, d.rare_pct, d.common_pct})
            if (!(v >= 0)) negative = true;
        if (negative) {
            report.errors.push_back({path + ".opinions", "percentages must be non-negative"});
            continue;
        }
        if (!d.sums_to_100())
            report.warnings.push_back({path + ".opinions", "percentages sum to " + std::to_string(d.sum()) +
                                                               ", outside 100 +/- 1"});
        std::optional<PaperStatus> classified;
        try {
            classified = classify_opinions(d);
        } catch (const Error&) {
            report.warnings.push_back({path + ".opinions", "all percentages are zero; unclassifiable"});
        }
        if (classified && a.paper_status && !a.manual_override && canonical(*a.paper_status) != *classified)
            report.errors.push_back({path + ".paper_status", "status " + std::string(to_string(*a.paper_status)) +
                                                                 " disagrees with opinion plurality " +
                                                                 std::string(to_string(*classified))});
    }
}

}  // namespace

ValidationReport validate_record(const PlantRecord& r, const CodeTable& codes, const LanguageRegistry& languages) {
    ValidationReport report;

    if (!r.id.empty() && !valid_id(r.id))
        report.errors.push_back({"id", "id may only contain letters, digits, '-', '_' and '.'"});

    if (text::is_blank(r.scientific_name)) {
        report.errors.push_back({"scientific_name", "missing"});
    } else {
        try {
            parse_scientific_name(r.scientific_name);
        } catch (const Error& e) {
            report.errors.push_back({"scientific_name", e.what()});
        }
    }
    if (text::is_blank(r.family)) report.warnings.push_back({"family", "missing"});

    check_text_list(r.common_names, "common_names", report);
    check_text_list(r.synonyms, "synonyms", report);
    check_text_list(r.areas_of_origin, "areas_of_origin", report);
    for (std::size_t i = 0; i < r.local_names.size(); ++i) {
        const auto& name = r.local_names[i];
        if (text::is_blank(name.text)) report.errors.push_back({at("local_names", i), "empty name"});
        if (!languages.contains(name.language))
            report.errors.push_back({at("local_names", i) + ".language",
                                     "unregistered language '" + name.language.code() + "'"});
    }

    check_uses(r, codes, report);

    for (std::size_t i = 0; i < r.drug_interactions.size(); ++i)
        if (text::is_blank(r.drug_interactions[i].agent))
            report.errors.push_back({at("drug_interactions", i) + ".agent", "missing"});

    std::set<std::string> uris;
    for (std::size_t i = 0; i < r.media.items.size(); ++i) {
        const auto& ref = r.media.items[i];
        auto path = at("media", i);
        if (text::is_blank(ref.uri)) {
            report.errors.push_back({path + ".uri", "missing"});
            continue;
        }
        if (!has_supported_scheme(ref.uri))
            report.warnings.push_back({path + ".uri", "unrecognized scheme in '" + ref.uri + "'"});
        if (!uris.insert(ref.uri).second) report.warnings.push_back({path + ".uri", "duplicate uri"});
    }

    if (r.sources.empty()) report.warnings.push_back({"sources", "no published source cited"});

    check_conservation(r, report);
    return report;
}

}  // namespace phytobase
