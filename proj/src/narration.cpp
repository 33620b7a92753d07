#include "phytobase/narration.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "phytobase/error.hpp"
#include "phytobase/text.hpp"

namespace phytobase {

std::string_view segment_key(Segment s) {
    switch (s) {
        case Segment::Name: return "name";
        case Segment::Family: return "family";
        case Segment::Description: return "description";
        case Segment::Uses: return "uses";
        case Segment::Parts: return "parts";
        case Segment::Preparations: return "preparations";
        case Segment::Contraindications: return "contraindications";
        case Segment::Toxicity: return "toxicity";
        case Segment::Interactions: return "interactions";
    }
    return "name";
}

// ---- label catalog -----------------------------------------------------------

const LabelCatalog& LabelCatalog::bundled() {
    static const LabelCatalog catalog = [] {
        LabelCatalog c;
        c.set(LanguageTag("en"), {"Scientific name", "Family", "Description", "Medicinal uses", "Parts used",
                                  "Preparations", "Contraindications", "Toxicity", "Drug interactions"});
        c.set(LanguageTag("fr"), {"Nom scientifique", "Famille", "Description", "Usages médicinaux",
                                  "Parties utilisées", "Préparations", "Contre-indications", "Toxicité",
                                  "Interactions médicamenteuses"});
        c.set(LanguageTag("yo"), {"Orúkọ ìmọ̀ sáyẹ́ǹsì", "Ìdílé", "Àpèjúwe", "Ìlò fún ìwòsàn", "Àwọn ẹ̀yà tí a ń lò",
                                  "Ìpèsè", "Ìkìlọ̀", "Májèlé", "Ìbáṣepọ̀ pẹ̀lú oògùn"});
        c.set(LanguageTag("ha"), {"Sunan kimiyya", "Iyali", "Bayani", "Amfanin magani", "Sassan da ake amfani da su",
                                  "Yadda ake haɗawa", "Hani", "Guba", "Haɗuwa da wasu magunguna"});
        c.set(LanguageTag("ig"), {"Aha sayensị", "Ezinụlọ", "Nkọwa", "Ọgwụgwọ ọ na-agwọ", "Akụkụ a na-eji",
                                  "Nkwadebe", "Ihe mgbochi", "Nsi", "Mmekọrịta ya na ọgwụ ndị ọzọ"});
        return c;
    }();
    return catalog;
}

LabelCatalog::Labels LabelCatalog::parse(std::string_view document) {
    if (!text::is_valid_utf8(document)) throw Error(ErrorCode::BadRequest, "label catalog is not valid UTF-8");
    Labels labels;
    std::array<bool, kSegmentCount> seen{};
    std::size_t line_no = 0;
    for (const auto& raw : text::split(document, '\n')) {
        ++line_no;
        auto line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto eq = line.find('=');
        auto where = "label catalog line " + std::to_string(line_no);
        if (eq == std::string_view::npos) throw Error(ErrorCode::BadRequest, where + ": expected key = caption");
        auto key = text::trim(line.substr(0, eq));
        auto value = text::trim(line.substr(eq + 1));
        bool known = false;
        for (std::size_t i = 0; i < kSegmentCount; ++i) {
            if (segment_key(kSegments[i]) != key) continue;
            known = true;
            if (seen[i]) throw Error(ErrorCode::BadRequest, where + ": duplicate key '" + std::string(key) + "'");
            if (value.empty()) throw Error(ErrorCode::BadRequest, where + ": empty caption");
            seen[i] = true;
            labels[i] = std::string(value);
        }
        if (!known) throw Error(ErrorCode::BadRequest, where + ": unknown key '" + std::string(key) + "'");
    }
    for (std::size_t i = 0; i < kSegmentCount; ++i)
        if (!seen[i])
            throw Error(ErrorCode::BadRequest, "label catalog is missing '" + std::string(segment_key(kSegments[i])) + "'");
    return labels;
}

std::string LabelCatalog::format(const Labels& labels) {
    std::string out;
    for (std::size_t i = 0; i < kSegmentCount; ++i)
        out += std::string(segment_key(kSegments[i])) + " = " + labels[i] + "\n";
    return out;
}

void LabelCatalog::load_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.path().extension() != ".labels") continue;
        auto tag = LanguageTag(entry.path().stem().string());
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        try {
            set(tag, parse(ss.str()));
        } catch (const Error& e) {
            throw Error(ErrorCode::BadRequest, entry.path().filename().string() + ": " + e.what());
        }
    }
    if (ec) throw Error(ErrorCode::BadRequest, "cannot read label directory " + dir.string() + ": " + ec.message());
}

const std::string& LabelCatalog::label(const LanguageTag& lang, Segment s) const {
    auto it = labels_.find(lang);
    if (it == labels_.end()) throw Error(ErrorCode::UnknownLanguage, "no labels for language '" + lang.code() + "'");
    return it->second[static_cast<std::size_t>(s)];
}

void LabelCatalog::check_complete(const LanguageRegistry& registry) const {
    for (const auto& tag : registry.tags()) {
        auto it = labels_.find(tag);
        if (it == labels_.end()) throw Error(ErrorCode::BadRequest, "no labels for language '" + tag.code() + "'");
        for (std::size_t i = 0; i < kSegmentCount; ++i)
            if (text::is_blank(it->second[i]))
                throw Error(ErrorCode::BadRequest, "language '" + tag.code() + "' lacks a caption for '" +
                                                       std::string(segment_key(kSegments[i])) + "'");
    }
}

// ---- narration ---------------------------------------------------------------

namespace {

std::string segment_body(const PlantRecord& r, Segment s, const CodeTable& codes) {
    switch (s) {
        case Segment::Name: return std::string(text::trim(r.scientific_name));
        case Segment::Family: return std::string(text::trim(r.family));
        case Segment::Description: return std::string(text::trim(r.description));
        case Segment::Uses: {
            std::vector<std::string> names;
            for (const auto& code : ailment_codes(r)) names.push_back(codes.resolve(code).full_name);
            return text::join(names, ", ");
        }
        case Segment::Parts: {
            std::vector<std::string> names;
            for (const auto& p : parts_used(r)) names.push_back(display_name(p));
            return text::join(names, ", ");
        }
        case Segment::Preparations: {
            std::vector<std::string> preps;
            std::set<std::string> seen;
            for (const auto& u : r.uses) {
                if (!u.preparation && !u.dosage) continue;
                std::string item = u.preparation.value_or("");
                if (u.dosage) item += item.empty() ? *u.dosage : " (" + *u.dosage + ")";
                if (!text::is_blank(item) && seen.insert(item).second) preps.push_back(item);
            }
            return text::join(preps, "; ");
        }
        case Segment::Contraindications: return text::join(r.contraindications, "; ");
        case Segment::Toxicity: return r.toxicity ? std::string(text::trim(*r.toxicity)) : std::string();
        case Segment::Interactions: {
            std::vector<std::string> items;
            for (const auto& d : r.drug_interactions) {
                std::string item = d.agent;
                if (!text::is_blank(d.effect)) item += ": " + d.effect;
                if (d.severity_note) item += " (" + *d.severity_note + ")";
                items.push_back(item);
            }
            return text::join(items, "; ");
        }
    }
    return {};
}

}  // namespace

NarrationScript build_narration(const PlantRecord& record, const LanguageTag& language, const NarrationContext& ctx,
                                std::uint64_t revision) {
    const auto& registry = ctx.languages ? *ctx.languages : LanguageRegistry::bundled();
    if (!registry.contains(language))
        throw Error(ErrorCode::UnknownLanguage, "language '" + language.code() + "' is not registered");

    NarrationScript script{language, {}, record.id, revision};
    for (auto s : kSegments) {
        auto body = segment_body(record, s, ctx.codes);
        if (text::is_blank(body)) continue;
        script.segments.push_back({s, ctx.catalog.label(language, s), std::move(body)});
    }
    return script;
}

std::string render_narration_plaintext(const NarrationScript& script) {
    std::string out;
    for (const auto& seg : script.segments) {
        out += seg.label + ": " + seg.body;
        char last = seg.body.empty() ? '\0' : seg.body.back();
        if (last != '.' && last != '!' && last != '?') out += '.';
        out += '\n';
    }
    return out;
}

ManifestResult media_manifest(const PlantRecord& record) { return clean_manifest(record.media); }

}  // namespace phytobase
