#include "phytobase/fixtures.hpp"

#include <map>

namespace phytobase::fixtures {

namespace {

const char* kSurveySource = "Ogun State ethnobotanical field survey, 2010-2011";
const char* kTradeSource = "Community forest trade survey, south-west Nigeria";
const char* kSwatSource = "Swat District market and conservation survey, Pakistan";

std::vector<LocalizedName> yoruba(std::initializer_list<const char*> names) {
    std::vector<LocalizedName> out;
    for (const char* n : names) out.push_back({n, LanguageTag("yo")});
    return out;
}

std::set<PlantPart> parts(std::initializer_list<PartKind> kinds) {
    std::set<PlantPart> out;
    for (auto k : kinds) out.insert(PlantPart::of(k));
    return out;
}

std::vector<UseEntry> uses(std::initializer_list<const char*> codes, const std::set<PlantPart>& used,
                           std::optional<std::string> preparation = std::nullopt) {
    std::vector<UseEntry> out;
    for (const char* c : codes) out.push_back({c, used, preparation, std::nullopt});
    return out;
}

PlantRecord plant(std::string id, std::string name, std::string family) {
    PlantRecord r;
    r.id = std::move(id);
    r.scientific_name = std::move(name);
    r.family = std::move(family);
    return r;
}

}  // namespace

std::vector<PlantRecord> ailment_extract() {
    std::vector<PlantRecord> out;

    auto aca = plant("acalypha-villicaulis", "Acalypha villicaulis Hoschst", "Euphorbiaceae");
    aca.local_names = yoruba({"Jinwini"});
    aca.uses = uses({"WI"}, parts({PartKind::Root}), "root decoction");
    aca.sources = {kSurveySource};
    out.push_back(aca);

    auto agr = plant("ageratum-conyzoides", "Ageratum conyzoides L", "Asteraceae");
    agr.local_names = yoruba({"Imi-esu", "Akayunyun"});
    agr.uses = uses({"URT", "WI"}, parts({PartKind::Leaf}), "leaf decoction");
    agr.sources = {kSurveySource};
    out.push_back(agr);

    auto all = plant("allium-sativum", "Allium sativum L.", "Alliaceae");
    all.common_names = {"Garlic"};
    all.local_names = yoruba({"Alubosa ayu"});
    all.uses = uses({"STR", "EYE"}, parts({PartKind::Root}));
    all.sources = {kSurveySource};
    out.push_back(all);

    // No family recorded for this row.
    auto asp = plant("asparagus-racemosus", "Asparagus racemosus", "");
    asp.local_names = yoruba({"Aluki", "Eye-kosun-Dangi"});
    asp.uses = uses({"MI"}, parts({PartKind::Root}));
    asp.sources = {kSurveySource};
    out.push_back(asp);

    auto ely = plant("elytraria-marginata", "Elytraria marginata", "Acanthaceae");
    ely.local_names = yoruba({"Ewe-Eso"});
    ely.uses = uses({"GNO", "IMP", "INF"}, parts({PartKind::WholePlant}));
    ely.sources = {kSurveySource};
    out.push_back(ely);

    auto eup = plant("euphorbia-laterifolia", "Euphorbia laterifolia", "Euphorbiaceae");
    eup.local_names = yoruba({"Orowere", "Enuopire Enukopure"});
    eup.uses = uses({"DMT", "INF"}, parts({PartKind::Leaf, PartKind::Exudate}));
    eup.sources = {kSurveySource};
    out.push_back(eup);

    auto fic = plant("ficus-capensis", "Ficus capensis Thunb", "Moraceae");
    fic.local_names = yoruba({"Opoto", "Farin bauree", "Anwerenwa"});
    fic.uses = uses({"OED", "LEP", "EPL", "RIC", "INF"},
                    parts({PartKind::Leaf, PartKind::Stem, PartKind::Root, PartKind::Fruit}));
    fic.sources = {kSurveySource};
    out.push_back(fic);

    auto zng = plant("zingiber-officinale", "Zingiber officinale Rosc", "Zingiberaceae");
    zng.common_names = {"Common Ginger", "Ginger"};
    zng.local_names = yoruba({"Jinja", "Atale", "Atalekopa"});
    zng.description = "Perennial herb with an aromatic underground rhizome, grown as a spice and a medicine.";
    zng.uses = uses({"AST", "PIL", "HEP", "OBE", "ANA", "CAN", "DYS"}, parts({PartKind::Rhizome, PartKind::Root}));
    zng.areas_of_origin = {"Southern Asia", "India", "China", "Nigeria", "Indonesia", "Africa"};
    zng.contraindications = {"Clotting disorder", "Anticoagulant therapy", "Gallstones"};
    zng.phytoconstituents = {"Gingerols", "Shogaols"};
    zng.toxicity = "Low at culinary doses";
    zng.pharmacology = "Antiemetic, carminative";
    zng.drug_interactions = {
        {"heparin", "may increase bleeding risk", std::nullopt},
        {"warfarin", "may increase bleeding risk", "monitor INR"},
        {"ticlopidine", "may increase bleeding risk", std::nullopt},
        {"cyclosporine", "decreased oral bioavailability", std::nullopt},
    };
    zng.media.items = {
        {MediaKind::Image, "images/zingiber-officinale.jpg", "Fresh rhizome"},
        {MediaKind::Video, "https://example.org/media/zingiber-officinale.mp4", std::nullopt},
    };
    zng.sources = {kSurveySource};
    out.push_back(zng);

    return out;
}

const std::vector<OpinionRow>& opinion_rows() {
    static const std::vector<OpinionRow> rows{
        {"Alchornea cordifolia", 44, 24, 20, 12},    {"Ananthus montanus", 32, 54, 10, 4},
        {"Bridelia ferruginea", 30, 48, 22, 24},     {"Callichilia barteri", 42, 22, 20, 16},
        {"Canarium schweinfurthii", 32, 28, 24, 16}, {"Cissus aralioides", 34, 48, 10, 8},
        {"Cocholepermum planchonni", 44, 26, 16, 14}, {"Combretum smeathmanii", 48, 23, 24, 2},
        {"Enantia chloratha", 44, 30, 14, 12},       {"Ocimum gratissimum", 46, 24, 20, 10},
        {"Rauwolfia vomitoria", 24, 64, 8, 4},       {"Rauwolfia vomitoria", 22, 60, 14, 4},
        {"Rothmannia hispida", 46, 38, 10, 6},       {"Sanseuieria guineense", 24, 60, 14, 2},
        {"Struchium sparganophora", 32, 48, 22, 18}, {"Thorningia sanguinea", 24, 42, 20, 14},
        {"Uraria picta", 44, 22, 14, 20},            {"Zingiber officinale", 56, 24, 10, 10},
    };
    return rows;
}

std::vector<PlantRecord> opinion_survey() {
    // Plurality per printed row, read off by hand.
    const std::map<std::string, PaperStatus> hand_status{
        {"Alchornea cordifolia", PaperStatus::Endangered},   {"Ananthus montanus", PaperStatus::Threatened},
        {"Bridelia ferruginea", PaperStatus::Threatened},    {"Callichilia barteri", PaperStatus::Endangered},
        {"Canarium schweinfurthii", PaperStatus::Endangered}, {"Cissus aralioides", PaperStatus::Threatened},
        {"Cocholepermum planchonni", PaperStatus::Endangered}, {"Combretum smeathmanii", PaperStatus::Endangered},
        {"Enantia chloratha", PaperStatus::Endangered},      {"Ocimum gratissimum", PaperStatus::Endangered},
        {"Rauwolfia vomitoria", PaperStatus::Threatened},    {"Rothmannia hispida", PaperStatus::Endangered},
        {"Sanseuieria guineense", PaperStatus::Threatened},  {"Struchium sparganophora", PaperStatus::Threatened},
        {"Thorningia sanguinea", PaperStatus::Threatened},   {"Uraria picta", PaperStatus::Endangered},
        {"Zingiber officinale", PaperStatus::Endangered},
    };

    std::vector<PlantRecord> out;
    for (const auto& row : opinion_rows()) {
        ConservationAssessment a;
        a.opinions = OpinionDistribution{row.endangered, row.threatened, row.rare, row.common};
        a.paper_status = hand_status.at(row.plant);
        auto id = make_slug(parse_scientific_name(row.plant));
        if (!out.empty() && out.back().id == id) {
            out.back().conservation.push_back(a);
            continue;
        }
        PlantRecord r;
        r.id = id;
        r.scientific_name = row.plant;
        r.conservation = {a};
        r.sources = {kTradeSource};
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PlantRecord> market_extract() {
    struct Row {
        const char* name;
        const char* family;
        MarketStatus market;
        PaperStatus status;
    };
    const Row rows[] = {
        {"Acorus calamus L.", "Araceae", MarketStatus::Persistent, PaperStatus::Endangered},
        {"Berberis vulgaris Linn", "Berberidaceae", MarketStatus::Persistent, PaperStatus::Endangered},
        {"Dioscorea deltoidea Wall.", "Dioscoreaceae", MarketStatus::Decreased, PaperStatus::Endangered},
        {"Polygonatum verticillatum All.", "Liliaceae", MarketStatus::Persistent, PaperStatus::Endangered},
        {"Paeonia emodi Wall. ex Hk.f.", "Paeoniaceae", MarketStatus::Persistent, PaperStatus::Endangered},
        {"Podophyllum hexandrum Royle", "Podophyllaceae", MarketStatus::Persistent, PaperStatus::Endangered},
        {"Bistorta amplexicaulis (D.Don) Greene", "Polygonaceae", MarketStatus::Persistent, PaperStatus::Endangered},
        {"Bergenia ciliate (Haw) Sternb.", "Saxifragaceae", MarketStatus::Increased, PaperStatus::Endangered},
        {"Valeriana jatamansi Jones", "Valerianaceae", MarketStatus::Decreased, PaperStatus::Endangered},
        {"Adiantum capillus-veneris L.", "Adiantaceae", MarketStatus::Increased, PaperStatus::Vulnerable},
        {"Pistacia integerrima Stew.ex Brand", "Anacardiaceae", MarketStatus::Increased, PaperStatus::Vulnerable},
        {"Berberis lyceum Royle", "Berberidaceae", MarketStatus::Increased, PaperStatus::Vulnerable},
        {"Ephedra gerardiana Wall. ex Stapf", "Ephedraceae", MarketStatus::Increased, PaperStatus::Vulnerable},
        {"Colchicum luteum Baker.", "Liliaceae", MarketStatus::Increased, PaperStatus::Vulnerable},
    };
    std::vector<PlantRecord> out;
    for (const auto& row : rows) {
        auto r = plant(make_slug(parse_scientific_name(row.name)), row.name, row.family);
        r.areas_of_origin = {"Pakistan"};
        r.market_status = row.market;
        ConservationAssessment a;
        a.paper_status = row.status;
        a.market_status = row.market;
        r.conservation = {a};
        r.sources = {kSwatSource};
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PlantRecord> full_corpus() {
    std::map<std::string, PlantRecord> merged;
    auto absorb = [&](std::vector<PlantRecord> records) {
        for (auto& r : records) {
            auto it = merged.find(r.id);
            if (it == merged.end()) {
                merged.emplace(r.id, std::move(r));
                continue;
            }
            auto& into = it->second;
            into.conservation.insert(into.conservation.end(), r.conservation.begin(), r.conservation.end());
            for (const auto& s : r.sources)
                if (std::find(into.sources.begin(), into.sources.end(), s) == into.sources.end())
                    into.sources.push_back(s);
        }
    };
    absorb(ailment_extract());
    absorb(opinion_survey());
    absorb(market_extract());
    std::vector<PlantRecord> out;
    for (auto& [id, r] : merged) out.push_back(std::move(r));
    return out;
}

RecordStore load(const std::vector<PlantRecord>& records) {
    RecordStore store;
    for (const auto& r : records) store.upsert(r);
    return store;
}

}  // namespace phytobase::fixtures
