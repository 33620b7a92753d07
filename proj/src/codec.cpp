#include "phytobase/codec.hpp"

#include <charconv>
#include <cmath>

#include "phytobase/csv.hpp"
#include "phytobase/error.hpp"
#include "phytobase/text.hpp"

namespace phytobase {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

Format parse_format(std::string_view s) {
    if (text::iequals(s, "csv")) return Format::Csv;
    if (text::iequals(s, "json")) return Format::Json;
    throw Error(ErrorCode::BadRequest, "unknown format '" + std::string(s) + "' (expected csv or json)");
}

// ---- JSON ----------------------------------------------------------------

namespace {

ordered_json opt(const std::optional<std::string>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json assessment_to_json(const ConservationAssessment& a) {
    ordered_json j;
    j["paper_status"] = a.paper_status ? ordered_json(std::string(to_string(*a.paper_status))) : ordered_json(nullptr);
    j["iucn"] = a.iucn ? ordered_json(std::string(to_string(*a.iucn))) : ordered_json(nullptr);
    if (a.opinions) {
        ordered_json o;
        o["endangered_pct"] = a.opinions->endangered_pct;
        o["threatened_pct"] = a.opinions->threatened_pct;
        o["rare_pct"] = a.opinions->rare_pct;
        o["common_pct"] = a.opinions->common_pct;
        j["opinions"] = o;
    } else {
        j["opinions"] = nullptr;
    }
    j["market_status"] =
        a.market_status ? ordered_json(std::string(to_string(*a.market_status))) : ordered_json(nullptr);
    j["assessed_on"] = opt(a.assessed_on);
    j["manual_override"] = a.manual_override;
    return j;
}

// Decoding helpers: every failure names the key path.
[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::BadRequest, path + ": " + what);
}

const json* member(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return nullptr;
    return &*it;
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) bad(path, "expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* k : allowed) known = known || key == k;
        if (!known) bad(path, "unknown key '" + key + "'");
    }
}

std::string get_string(const json& obj, const char* key, const std::string& path) {
    const json* v = member(obj, key);
    if (!v) return {};
    if (!v->is_string()) bad(path + "." + key, "expected a string");
    return v->get<std::string>();
}

std::optional<std::string> get_opt_string(const json& obj, const char* key, const std::string& path) {
    const json* v = member(obj, key);
    if (!v) return std::nullopt;
    if (!v->is_string()) bad(path + "." + key, "expected a string or null");
    return v->get<std::string>();
}

std::vector<std::string> get_strings(const json& obj, const char* key, const std::string& path) {
    std::vector<std::string> out;
    const json* v = member(obj, key);
    if (!v) return out;
    if (!v->is_array()) bad(path + "." + key, "expected an array");
    for (const auto& e : *v) {
        if (!e.is_string()) bad(path + "." + key, "expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

const json& get_array(const json& obj, const char* key, const std::string& path) {
    static const json empty = json::array();
    const json* v = member(obj, key);
    if (!v) return empty;
    if (!v->is_array()) bad(path + "." + key, "expected an array");
    return *v;
}

template <typename Fn>
auto parsed(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

double get_number(const json& obj, const char* key, const std::string& path) {
    const json* v = member(obj, key);
    if (!v) return 0;
    if (!v->is_number()) bad(path + "." + key, "expected a number");
    return v->get<double>();
}

ConservationAssessment assessment_from_json(const json& j, const std::string& path) {
    check_keys(j, path,
               {"paper_status", "iucn", "opinions", "market_status", "assessed_on", "manual_override"});
    ConservationAssessment a;
    if (auto s = get_opt_string(j, "paper_status", path))
        a.paper_status = parsed(path + ".paper_status", [&] { return parse_paper_status(*s); });
    if (auto s = get_opt_string(j, "iucn", path)) a.iucn = parsed(path + ".iucn", [&] { return parse_iucn(*s); });
    if (const json* o = member(j, "opinions")) {
        auto p = path + ".opinions";
        check_keys(*o, p, {"endangered_pct", "threatened_pct", "rare_pct", "common_pct"});
        a.opinions = OpinionDistribution{get_number(*o, "endangered_pct", p), get_number(*o, "threatened_pct", p),
                                         get_number(*o, "rare_pct", p), get_number(*o, "common_pct", p)};
    }
    if (auto s = get_opt_string(j, "market_status", path))
        a.market_status = parsed(path + ".market_status", [&] { return parse_market_status(*s); });
    a.assessed_on = get_opt_string(j, "assessed_on", path);
    if (const json* v = member(j, "manual_override")) {
        if (!v->is_boolean()) bad(path + ".manual_override", "expected a boolean");
        a.manual_override = v->get<bool>();
    }
    return a;
}

}  // namespace

ordered_json record_to_json(const PlantRecord& r) {
    ordered_json j;
    j["id"] = r.id;
    j["scientific_name"] = r.scientific_name;
    j["family"] = r.family;
    j["common_names"] = r.common_names;
    j["synonyms"] = r.synonyms;
    j["local_names"] = ordered_json::array();
    for (const auto& n : r.local_names)
        j["local_names"].push_back(ordered_json{{"text", n.text}, {"language", n.language.code()}});
    j["description"] = r.description;
    j["uses"] = ordered_json::array();
    for (const auto& u : r.uses) {
        ordered_json e;
        e["ailment"] = u.ailment;
        e["parts_used"] = ordered_json::array();
        for (const auto& p : u.parts_used) e["parts_used"].push_back(to_string(p));
        e["preparation"] = opt(u.preparation);
        e["dosage"] = opt(u.dosage);
        j["uses"].push_back(e);
    }
    j["areas_of_origin"] = r.areas_of_origin;
    j["contraindications"] = r.contraindications;
    j["phytoconstituents"] = r.phytoconstituents;
    j["adverse_reactions"] = r.adverse_reactions;
    j["toxicity"] = opt(r.toxicity);
    j["pharmacology"] = opt(r.pharmacology);
    j["drug_interactions"] = ordered_json::array();
    for (const auto& d : r.drug_interactions) {
        ordered_json e;
        e["agent"] = d.agent;
        e["effect"] = d.effect;
        e["severity_note"] = opt(d.severity_note);
        j["drug_interactions"].push_back(e);
    }
    j["media"] = ordered_json::array();
    for (const auto& m : r.media.items) {
        ordered_json e;
        e["kind"] = std::string(to_string(m.kind));
        e["uri"] = m.uri;
        e["caption"] = opt(m.caption);
        j["media"].push_back(e);
    }
    j["sources"] = r.sources;
    j["conservation"] = ordered_json::array();
    for (const auto& a : r.conservation) j["conservation"].push_back(assessment_to_json(a));
    j["market_status"] = r.market_status ? ordered_json(std::string(to_string(*r.market_status))) : ordered_json(nullptr);
    return j;
}

PlantRecord record_from_json(const json& j) {
    const std::string root = "record";
    check_keys(j, root,
               {"id", "scientific_name", "family", "common_names", "synonyms", "local_names", "description", "uses",
                "areas_of_origin", "contraindications", "phytoconstituents", "adverse_reactions", "toxicity",
                "pharmacology", "drug_interactions", "media", "sources", "conservation", "market_status"});
    PlantRecord r;
    r.id = get_string(j, "id", root);
    r.scientific_name = get_string(j, "scientific_name", root);
    r.family = get_string(j, "family", root);
    r.common_names = get_strings(j, "common_names", root);
    r.synonyms = get_strings(j, "synonyms", root);
    const auto& locals = get_array(j, "local_names", root);
    for (std::size_t i = 0; i < locals.size(); ++i) {
        auto path = "local_names[" + std::to_string(i) + "]";
        check_keys(locals[i], path, {"text", "language"});
        LocalizedName n;
        n.text = get_string(locals[i], "text", path);
        if (auto lang = get_opt_string(locals[i], "language", path))
            n.language = parsed(path + ".language", [&] { return LanguageTag(*lang); });
        r.local_names.push_back(std::move(n));
    }
    r.description = get_string(j, "description", root);
    const auto& uses = get_array(j, "uses", root);
    for (std::size_t i = 0; i < uses.size(); ++i) {
        auto path = "uses[" + std::to_string(i) + "]";
        check_keys(uses[i], path, {"ailment", "parts_used", "preparation", "dosage"});
        UseEntry u;
        u.ailment = get_string(uses[i], "ailment", path);
        for (const auto& p : get_strings(uses[i], "parts_used", path))
            u.parts_used.insert(parsed(path + ".parts_used", [&] { return parse_plant_part(p); }));
        u.preparation = get_opt_string(uses[i], "preparation", path);
        u.dosage = get_opt_string(uses[i], "dosage", path);
        r.uses.push_back(std::move(u));
    }
    r.areas_of_origin = get_strings(j, "areas_of_origin", root);
    r.contraindications = get_strings(j, "contraindications", root);
    r.phytoconstituents = get_strings(j, "phytoconstituents", root);
    r.adverse_reactions = get_strings(j, "adverse_reactions", root);
    r.toxicity = get_opt_string(j, "toxicity", root);
    r.pharmacology = get_opt_string(j, "pharmacology", root);
    const auto& drugs = get_array(j, "drug_interactions", root);
    for (std::size_t i = 0; i < drugs.size(); ++i) {
        auto path = "drug_interactions[" + std::to_string(i) + "]";
        check_keys(drugs[i], path, {"agent", "effect", "severity_note"});
        r.drug_interactions.push_back({get_string(drugs[i], "agent", path), get_string(drugs[i], "effect", path),
                                       get_opt_string(drugs[i], "severity_note", path)});
    }
    const auto& media = get_array(j, "media", root);
    for (std::size_t i = 0; i < media.size(); ++i) {
        auto path = "media[" + std::to_string(i) + "]";
        check_keys(media[i], path, {"kind", "uri", "caption"});
        MediaRef m;
        if (auto kind = get_opt_string(media[i], "kind", path))
            m.kind = parsed(path + ".kind", [&] { return parse_media_kind(*kind); });
        m.uri = get_string(media[i], "uri", path);
        m.caption = get_opt_string(media[i], "caption", path);
        r.media.items.push_back(std::move(m));
    }
    r.sources = get_strings(j, "sources", root);
    const auto& cons = get_array(j, "conservation", root);
    for (std::size_t i = 0; i < cons.size(); ++i)
        r.conservation.push_back(assessment_from_json(cons[i], "conservation[" + std::to_string(i) + "]"));
    if (auto s = get_opt_string(j, "market_status", root))
        r.market_status = parsed("market_status", [&] { return parse_market_status(*s); });
    return r;
}

// ---- CSV -----------------------------------------------------------------

namespace {

enum Column : std::size_t {
    kName,
    kFamily,
    kCommon,
    kSynonyms,
    kLocal,
    kDescription,
    kUses,
    kParts,
    kOrigins,
    kDosage,
    kContra,
    kPhyto,
    kAdverse,
    kToxicity,
    kPharmacology,
    kDrugs,
    kPicture,
    kSources,
    kId,
    kConservation,
    kMarket,
    kColumnCount
};

constexpr std::size_t kTableColumns = kId;

std::string join_list(const std::vector<std::string>& values) {
    std::vector<std::string> escaped;
    for (const auto& v : values) escaped.push_back(text::escape(v, "|"));
    return text::join(escaped, "|");
}

std::vector<std::string> split_list(std::string_view field) {
    if (field.empty()) return {};
    return text::split_escaped(field, '|');
}

std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

double parse_number(std::string_view s, const std::string& column) {
    double v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size())
        throw Error(ErrorCode::BadRequest, column + ": bad number '" + std::string(s) + "'");
    return v;
}

bool has_language_suffix(std::string_view s) {
    return s.size() >= 3 && s[s.size() - 3] == '@' && is_well_formed_language_code(s.substr(s.size() - 2));
}

std::string encode_local(const LocalizedName& n) {
    if (n.language.code() == "yo" && !has_language_suffix(n.text)) return n.text;
    return n.text + "@" + n.language.code();
}

LocalizedName decode_local(std::string_view s) {
    if (has_language_suffix(s))
        return {std::string(s.substr(0, s.size() - 3)), LanguageTag(s.substr(s.size() - 2))};
    return {std::string(s), LanguageTag("yo")};
}

std::string encode_use(const UseEntry& u) {
    std::vector<std::string> parts;
    for (const auto& p : u.parts_used) parts.push_back(text::escape(to_string(p), ":+"));
    return text::escape(u.ailment, ":+") + ":" + text::join(parts, "+") + ":" +
           text::escape(u.preparation.value_or(""), ":+");
}

UseEntry decode_use(std::string_view s) {
    // Only the first two separators are structural; the preparation keeps the rest.
    auto pieces = text::split_raw(s, ':', 3);
    UseEntry u;
    u.ailment = std::string(text::trim(text::unescape(pieces[0])));
    if (pieces.size() > 1 && !pieces[1].empty())
        for (const auto& p : text::split_escaped(pieces[1], '+')) u.parts_used.insert(parse_plant_part(p));
    if (pieces.size() > 2 && !pieces[2].empty()) u.preparation = text::unescape(pieces[2]);
    return u;
}

std::string encode_assessment(const ConservationAssessment& a) {
    std::vector<std::string> kv;
    if (a.paper_status) kv.push_back("status=" + std::string(to_string(*a.paper_status)));
    if (a.iucn) kv.push_back("iucn=" + std::string(to_string(*a.iucn)));
    if (a.opinions) {
        const auto& o = *a.opinions;
        kv.push_back("opinions=" + format_number(o.endangered_pct) + "/" + format_number(o.threatened_pct) + "/" +
                     format_number(o.rare_pct) + "/" + format_number(o.common_pct));
    }
    if (a.market_status) kv.push_back("market=" + std::string(to_string(*a.market_status)));
    if (a.assessed_on) kv.push_back("date=" + text::escape(*a.assessed_on, ";|"));
    if (a.manual_override) kv.push_back("override=true");
    return text::join(kv, ";");
}

ConservationAssessment decode_assessment(std::string_view s) {
    ConservationAssessment a;
    if (s.empty()) return a;
    for (const auto& item : text::split_escaped(s, ';')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::BadRequest, "Conservation Status: expected key=value, got '" + item + "'");
        auto key = item.substr(0, eq);
        auto value = item.substr(eq + 1);
        if (key == "status") {
            a.paper_status = parse_paper_status(value);
        } else if (key == "iucn") {
            a.iucn = parse_iucn(value);
        } else if (key == "opinions") {
            auto nums = text::split(value, '/');
            if (nums.size() != 4)
                throw Error(ErrorCode::BadRequest, "Conservation Status: opinions need four values");
            a.opinions = OpinionDistribution{parse_number(nums[0], "opinions"), parse_number(nums[1], "opinions"),
                                             parse_number(nums[2], "opinions"), parse_number(nums[3], "opinions")};
        } else if (key == "market") {
            a.market_status = parse_market_status(value);
        } else if (key == "date") {
            a.assessed_on = value;
        } else if (key == "override") {
            a.manual_override = value == "true";
        } else {
            throw Error(ErrorCode::BadRequest, "Conservation Status: unknown key '" + key + "'");
        }
    }
    return a;
}

std::optional<std::string> non_empty(std::string_view s) {
    if (s.empty()) return std::nullopt;
    return std::string(s);
}

}  // namespace

const std::vector<std::string>& csv_header() {
    static const std::vector<std::string> header{"Scientific/Botanical Name",
                                                 "Family Name",
                                                 "Common Name",
                                                 "Synonyms",
                                                 "Local Names (Yoruba Lang)",
                                                 "Description",
                                                 "Medicinal Uses",
                                                 "Parts Used",
                                                 "Area(s) of Origin",
                                                 "Preparations / Dosage",
                                                 "Contraindications",
                                                 "Phytoconstituents",
                                                 "Adverse Reactions",
                                                 "Toxicity",
                                                 "Pharmacology",
                                                 "Drug interactions",
                                                 "Picture",
                                                 "Published Source(s)",
                                                 "Id",
                                                 "Conservation Status",
                                                 "Market Status"};
    return header;
}

std::vector<std::string> record_to_csv_row(const PlantRecord& r) {
    std::vector<std::string> f(kColumnCount);
    f[kName] = r.scientific_name;
    f[kFamily] = r.family;
    f[kCommon] = join_list(r.common_names);
    f[kSynonyms] = join_list(r.synonyms);
    std::vector<std::string> locals;
    for (const auto& n : r.local_names) locals.push_back(encode_local(n));
    f[kLocal] = join_list(locals);
    f[kDescription] = r.description;

    std::vector<std::string> uses, dosages;
    bool any_dosage = false;
    for (const auto& u : r.uses) {
        uses.push_back(encode_use(u));
        dosages.push_back(u.dosage.value_or(""));
        any_dosage = any_dosage || u.dosage.has_value();
    }
    f[kUses] = join_list(uses);
    std::vector<std::string> parts;
    for (const auto& p : parts_used(r)) parts.push_back(to_string(p));
    f[kParts] = join_list(parts);
    f[kOrigins] = join_list(r.areas_of_origin);
    f[kDosage] = any_dosage ? join_list(dosages) : "";
    f[kContra] = join_list(r.contraindications);
    f[kPhyto] = join_list(r.phytoconstituents);
    f[kAdverse] = join_list(r.adverse_reactions);
    f[kToxicity] = r.toxicity.value_or("");
    f[kPharmacology] = r.pharmacology.value_or("");
    std::vector<std::string> drugs;
    for (const auto& d : r.drug_interactions)
        drugs.push_back(text::escape(d.agent, ";") + ";" + text::escape(d.effect, ";") + ";" +
                        text::escape(d.severity_note.value_or(""), ";"));
    f[kDrugs] = join_list(drugs);
    // A bare URI when the kind follows from it, else "uri;Kind[;caption]".
    std::vector<std::string> pictures;
    for (const auto& m : r.media.items) {
        auto entry = text::escape(m.uri, ";");
        if (m.caption || m.kind != infer_media_kind(m.uri)) entry += ";" + std::string(to_string(m.kind));
        if (m.caption) entry += ";" + text::escape(*m.caption, ";");
        pictures.push_back(std::move(entry));
    }
    f[kPicture] = join_list(pictures);
    f[kSources] = join_list(r.sources);
    f[kId] = r.id;
    std::vector<std::string> assessments;
    for (const auto& a : r.conservation) assessments.push_back(encode_assessment(a));
    f[kConservation] = join_list(assessments);
    f[kMarket] = r.market_status ? std::string(to_string(*r.market_status)) : "";
    return f;
}

PlantRecord record_from_csv_row(const std::vector<std::string>& in) {
    if (in.size() != kTableColumns && in.size() != kColumnCount)
        throw Error(ErrorCode::BadRequest, "expected " + std::to_string(kColumnCount) + " fields, got " +
                                               std::to_string(in.size()));
    auto f = in;
    f.resize(kColumnCount);
    const auto& header = csv_header();
    auto column = [&](std::size_t i, auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            throw Error(ErrorCode::BadRequest, header[i] + ": " + e.what());
        }
    };

    PlantRecord r;
    r.scientific_name = f[kName];
    r.family = f[kFamily];
    r.common_names = split_list(f[kCommon]);
    r.synonyms = split_list(f[kSynonyms]);
    column(kLocal, [&] {
        for (const auto& s : split_list(f[kLocal])) r.local_names.push_back(decode_local(s));
    });
    r.description = f[kDescription];
    column(kUses, [&] {
        for (const auto& s : split_list(f[kUses])) r.uses.push_back(decode_use(s));
    });
    column(kDosage, [&] {
        if (f[kDosage].empty()) return;
        auto dosages = split_list(f[kDosage]);
        if (dosages.size() != r.uses.size())
            throw Error(ErrorCode::BadRequest, "one entry per medicinal use expected");
        for (std::size_t i = 0; i < dosages.size(); ++i) r.uses[i].dosage = non_empty(dosages[i]);
    });
    r.areas_of_origin = split_list(f[kOrigins]);
    r.contraindications = split_list(f[kContra]);
    r.phytoconstituents = split_list(f[kPhyto]);
    r.adverse_reactions = split_list(f[kAdverse]);
    r.toxicity = non_empty(f[kToxicity]);
    r.pharmacology = non_empty(f[kPharmacology]);
    column(kDrugs, [&] {
        for (const auto& s : split_list(f[kDrugs])) {
            auto pieces = text::split_escaped(s, ';');
            if (pieces.size() > 3) throw Error(ErrorCode::BadRequest, "expected agent;effect;note");
            pieces.resize(3);
            r.drug_interactions.push_back({pieces[0], pieces[1], non_empty(pieces[2])});
        }
    });
    column(kPicture, [&] {
        for (const auto& s : split_list(f[kPicture])) {
            auto pieces = text::split_escaped(s, ';');
            if (pieces.size() > 3) throw Error(ErrorCode::BadRequest, "expected uri;kind;caption");
            MediaRef m{infer_media_kind(pieces[0]), pieces[0], std::nullopt};
            if (pieces.size() > 1) m.kind = parse_media_kind(pieces[1]);
            if (pieces.size() > 2) m.caption = pieces[2];
            r.media.items.push_back(std::move(m));
        }
    });
    r.sources = split_list(f[kSources]);
    r.id = f[kId];
    column(kConservation, [&] {
        for (const auto& s : split_list(f[kConservation])) r.conservation.push_back(decode_assessment(s));
    });
    column(kMarket, [&] {
        if (!f[kMarket].empty()) r.market_status = parse_market_status(f[kMarket]);
    });
    return r;
}

// ---- import / export -------------------------------------------------------

DecodedSource decode_source(std::string_view source, Format format) {
    if (!text::is_valid_utf8(source)) throw Error(ErrorCode::MalformedSource, "source is not valid UTF-8");
    DecodedSource out;

    if (format == Format::Json) {
        json doc;
        try {
            doc = json::parse(source);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::MalformedSource, std::string("invalid JSON: ") + e.what());
        }
        const json* records = &doc;
        if (doc.is_object()) {
            for (const auto& [key, _] : doc.items())
                if (key != "codes" && key != "records")
                    throw Error(ErrorCode::MalformedSource, "unknown top-level key '" + key + "'");
            if (auto it = doc.find("codes"); it != doc.end()) {
                if (!it->is_object()) throw Error(ErrorCode::MalformedSource, "'codes' must be an object");
                for (const auto& [code, name] : it->items()) {
                    if (!name.is_string()) throw Error(ErrorCode::MalformedSource, "code names must be strings");
                    out.codes.emplace(code, name.get<std::string>());
                }
            }
            auto it = doc.find("records");
            if (it == doc.end()) throw Error(ErrorCode::MalformedSource, "missing 'records' array");
            records = &*it;
        }
        if (!records->is_array()) throw Error(ErrorCode::MalformedSource, "expected an array of records");
        for (std::size_t i = 0; i < records->size(); ++i) {
            DecodedRecord d;
            d.locator = "record[" + std::to_string(i) + "]";
            try {
                d.record = record_from_json((*records)[i]);
            } catch (const Error& e) {
                d.issues.push_back({"record", e.what()});
            }
            out.records.push_back(std::move(d));
        }
        return out;
    }

    auto rows = csv::parse(source);
    if (rows.empty()) throw Error(ErrorCode::MalformedSource, "CSV has no header row");
    const auto& header = csv_header();
    const auto& got = rows.front().fields;
    bool full = got == header;
    bool table_only = got.size() == kTableColumns && std::equal(got.begin(), got.end(), header.begin());
    if (!full && !table_only) throw Error(ErrorCode::MalformedSource, "CSV header does not match the record layout");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        DecodedRecord d;
        d.locator = "line " + std::to_string(rows[i].line);
        try {
            if (rows[i].fields.size() != got.size())
                throw Error(ErrorCode::BadRequest, "expected " + std::to_string(got.size()) + " fields, got " +
                                                       std::to_string(rows[i].fields.size()));
            d.record = record_from_csv_row(rows[i].fields);
        } catch (const Error& e) {
            d.issues.push_back({"row", e.what()});
        }
        out.records.push_back(std::move(d));
    }
    return out;
}

ImportReport import_records(RecordStore& store, std::string_view source, Format format,
                            const std::function<void(const PlantRecord&)>& on_upsert,
                            const std::function<void(const std::string&, const std::string&)>& on_code) {
    auto decoded = decode_source(source, format);
    for (const auto& [code, name] : decoded.codes) {
        try {
            store.register_code(code, name);
        } catch (const Error& e) {
            throw Error(ErrorCode::MalformedSource, std::string("codes: ") + e.what());
        }
        if (on_code) on_code(text::to_upper(code), name);
    }

    ImportReport report;
    for (auto& d : decoded.records) {
        if (!d.issues.empty()) {
            report.rejected.emplace_back(d.locator, ValidationReport{d.issues, {}});
            continue;
        }
        auto& record = *d.record;
        auto validation = store.validate(record);
        if (!validation.ok()) {
            report.rejected.emplace_back(d.locator, std::move(validation));
            continue;
        }
        if (record.id.empty()) record.id = store.allocate_id(record);
        store.upsert(record);
        ++report.imported;
        report.warnings += validation.warnings.size();
        if (on_upsert) on_upsert(record);
    }
    return report;
}

std::string export_records(const RecordStore& store, const ExportSelection& selection, Format format) {
    std::optional<std::string> code;
    if (selection.ailment) code = store.codes().resolve(*selection.ailment).code;
    if (selection.ids)
        for (const auto& id : *selection.ids)
            if (!store.contains(id)) throw Error(ErrorCode::NotFound, "no record with id '" + id + "'");

    std::vector<const PlantRecord*> chosen;
    for (const auto& [id, record] : store.records()) {
        if (selection.ids && !selection.ids->count(id)) continue;
        if (code) {
            auto codes = ailment_codes(*record);
            if (std::find(codes.begin(), codes.end(), *code) == codes.end()) continue;
        }
        chosen.push_back(record.get());
    }

    if (format == Format::Json) {
        ordered_json arr = ordered_json::array();
        for (const auto* r : chosen) arr.push_back(record_to_json(*r));
        return arr.dump(2) + "\n";
    }
    std::string out = csv::format_row(csv_header());
    for (const auto* r : chosen) out += csv::format_row(record_to_csv_row(*r));
    return out;
}

}  // namespace phytobase
