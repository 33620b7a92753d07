#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "phytobase/fixtures.hpp"
#include "phytobase/narration.hpp"

using namespace phytobase;

namespace {

PlantRecord fixture(const std::string& id) {
    for (auto& r : fixtures::ailment_extract())
        if (r.id == id) return r;
    throw std::runtime_error(id);
}

}  // namespace

TEST(Narration, SegmentsInFixedOrder) {
    auto s = build_narration(fixture("zingiber-officinale"), LanguageTag("en"), {}, 4);
    EXPECT_EQ(s.record_id, "zingiber-officinale");
    EXPECT_EQ(s.record_revision, 4u);
    std::vector<Segment> order;
    for (const auto& seg : s.segments) order.push_back(seg.segment);
    EXPECT_EQ(order, (std::vector<Segment>{Segment::Name, Segment::Family, Segment::Description, Segment::Uses,
                                           Segment::Parts, Segment::Contraindications, Segment::Toxicity,
                                           Segment::Interactions}));
    EXPECT_EQ(s.segments[3].label, "Medicinal uses");
    EXPECT_EQ(s.segments[3].body, "Asthma, Piles, Hepatitis, Obesity, Anaemia, Cancer, Dysmenorrhoea");
}

TEST(Narration, PlainTextRendering) {
    auto s = build_narration(fixture("acalypha-villicaulis"), LanguageTag("en"));
    EXPECT_EQ(render_narration_plaintext(s),
              "Scientific name: Acalypha villicaulis Hoschst.\n"
              "Family: Euphorbiaceae.\n"
              "Medicinal uses: Women Infertility.\n"
              "Parts used: Root.\n"
              "Preparations: root decoction.\n");
    auto z = render_narration_plaintext(build_narration(fixture("zingiber-officinale"), LanguageTag("en")));
    EXPECT_NE(z.find("a medicine.\n"), std::string::npos);
    EXPECT_EQ(z.find("medicine..\n"), std::string::npos);
}

TEST(Narration, MissingFamilySegmentIsSkipped) {
    auto s = build_narration(fixture("asparagus-racemosus"), LanguageTag("fr"));
    for (const auto& seg : s.segments) EXPECT_NE(seg.segment, Segment::Family);
    EXPECT_EQ(s.segments.front().body, "Asparagus racemosus");
}

TEST(Narration, LanguagesChangeLabelsOnly) {
    auto en = build_narration(fixture("ficus-capensis"), LanguageTag("en"));
    for (const char* tag : {"fr", "yo", "ha", "ig"}) {
        auto other = build_narration(fixture("ficus-capensis"), LanguageTag(tag));
        ASSERT_EQ(other.segments.size(), en.segments.size());
        for (std::size_t i = 0; i < en.segments.size(); ++i) {
            EXPECT_EQ(other.segments[i].body, en.segments[i].body);
            EXPECT_FALSE(other.segments[i].label.empty());
        }
        EXPECT_NE(other.segments[0].label, en.segments[0].label) << tag;
    }
}

TEST(Narration, Errors) {
    try {
        build_narration(fixture("ficus-capensis"), LanguageTag("de"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownLanguage);
    }
    auto r = fixture("ficus-capensis");
    r.uses[0].ailment = "MAL";
    try {
        build_narration(r, LanguageTag("en"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownCode);
    }
    CodeTable codes = CodeTable::builtin();
    codes.add("MAL", "Malaria");
    NarrationContext ctx{codes, LabelCatalog::bundled(), nullptr};
    auto s = build_narration(r, LanguageTag("en"), ctx);
    ASSERT_EQ(s.segments[2].segment, Segment::Uses);
    EXPECT_EQ(s.segments[2].body.rfind("Malaria", 0), 0u);
}

TEST(Labels, ParseFormatRoundTrip) {
    LabelCatalog::Labels labels;
    for (std::size_t i = 0; i < kSegmentCount; ++i) labels[i] = "L" + std::to_string(i);
    EXPECT_EQ(LabelCatalog::parse(LabelCatalog::format(labels)), labels);
    EXPECT_THROW(LabelCatalog::parse("name = Only one\n"), Error);
    auto doc = LabelCatalog::format(labels) + "name = twice\n";
    EXPECT_THROW(LabelCatalog::parse(doc), Error);
}

TEST(Labels, DirectoryOverrides) {
    auto dir = std::filesystem::temp_directory_path() / "phytobase-labels-test";
    std::filesystem::create_directories(dir);
    LabelCatalog::Labels labels;
    for (std::size_t i = 0; i < kSegmentCount; ++i) labels[i] = "Caption " + std::to_string(i);
    std::ofstream(dir / "yo.labels") << "# custom\n" << LabelCatalog::format(labels);
    LabelCatalog catalog = LabelCatalog::bundled();
    catalog.load_directory(dir);
    std::filesystem::remove_all(dir);
    EXPECT_EQ(catalog.label(LanguageTag("yo"), Segment::Family), "Caption 1");
    EXPECT_EQ(catalog.label(LanguageTag("en"), Segment::Family), "Family");
    EXPECT_NO_THROW(catalog.check_complete(LanguageRegistry::bundled()));
    LanguageRegistry reg = LanguageRegistry::bundled();
    reg.add(LanguageTag("de"));
    EXPECT_THROW(catalog.check_complete(reg), Error);
}

TEST(Media, ManifestForRecord) {
    auto m = media_manifest(fixture("zingiber-officinale"));
    ASSERT_EQ(m.manifest.items.size(), 2u);
    EXPECT_EQ(m.manifest.items[1].kind, MediaKind::Video);
    EXPECT_TRUE(m.warnings.empty());
}
