#include <gtest/gtest.h>

#include "phytobase/error.hpp"
#include "phytobase/record.hpp"

using namespace phytobase;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::BadRequest;
}

}  // namespace

TEST(ScientificName, SplitsGenusEpithetAuthority) {
    auto n = parse_scientific_name("Zingiber officinale Rosc");
    EXPECT_EQ(n.genus, "Zingiber");
    EXPECT_EQ(n.epithet, "officinale");
    EXPECT_EQ(n.authority, "Rosc");
    EXPECT_EQ(n.rendered(), "Zingiber officinale Rosc");

    auto bare = parse_scientific_name("  Asparagus   racemosus ");
    EXPECT_EQ(bare.authority, std::nullopt);
    EXPECT_EQ(bare.rendered(), "Asparagus racemosus");

    auto hyphen = parse_scientific_name("Adiantum capillus-veneris L.");
    EXPECT_EQ(hyphen.epithet, "capillus-veneris");
    EXPECT_EQ(parse_scientific_name("Bistorta amplexicaulis (D.Don) Greene").authority, "(D.Don) Greene");
}

TEST(ScientificName, Rejects) {
    EXPECT_EQ(code_of([] { parse_scientific_name("   "); }), ErrorCode::EmptyName);
    EXPECT_EQ(code_of([] { parse_scientific_name("Zingiber"); }), ErrorCode::MalformedName);
    EXPECT_EQ(code_of([] { parse_scientific_name("zingiber officinale"); }), ErrorCode::MalformedName);
    EXPECT_EQ(code_of([] { parse_scientific_name("Zingiber Officinale"); }), ErrorCode::MalformedName);
}

TEST(ScientificName, Slug) {
    EXPECT_EQ(make_slug(parse_scientific_name("Ficus capensis Thunb")), "ficus-capensis");
    EXPECT_EQ(make_slug(parse_scientific_name("Adiantum capillus-veneris L.")), "adiantum-capillus-veneris");
}

TEST(CodeTable, BuiltinLegend) {
    const auto& t = CodeTable::builtin();
    EXPECT_EQ(t.entries().size(), 20u);
    EXPECT_EQ(t.resolve("wi").full_name, "Women Infertility");
    EXPECT_EQ(t.resolve("INF").full_name, "Infertility");
    EXPECT_EQ(t.resolve(" mi ").full_name, "Male Infertility");
    EXPECT_EQ(t.resolve("URT").full_name, "Urinary Tract Infections");
    EXPECT_EQ(code_of([&] { t.resolve("ANN"); }), ErrorCode::UnknownCode);
}

TEST(CodeTable, AddKeepsBijection) {
    CodeTable t = CodeTable::builtin();
    t.add("mal", "Malaria");
    EXPECT_TRUE(t.contains("MAL"));
    EXPECT_FALSE(t.is_builtin("MAL"));
    EXPECT_EQ(t.custom_entries(), (std::map<std::string, std::string>{{"MAL", "Malaria"}}));
    t.add("MAL", "Malaria");  // identical redefinition is a no-op
    EXPECT_EQ(code_of([&] { t.add("MAL", "Fever"); }), ErrorCode::BadRequest);
    EXPECT_EQ(code_of([&] { t.add("FEV", "Malaria"); }), ErrorCode::BadRequest);
    EXPECT_EQ(code_of([&] { t.add("X1", "Something"); }), ErrorCode::BadRequest);
}

TEST(PlantParts, ParseAndDisplay) {
    EXPECT_EQ(parse_plant_part("Leaves"), PlantPart::of(PartKind::Leaf));
    EXPECT_EQ(parse_plant_part("roots"), PlantPart::of(PartKind::Root));
    EXPECT_EQ(parse_plant_part("Whole plant"), PlantPart::of(PartKind::WholePlant));
    EXPECT_EQ(parse_plant_part("Tubers"), PlantPart::of(PartKind::Tuber));
    EXPECT_EQ(parse_plant_part("Fronds"), PlantPart::of(PartKind::Frond));
    auto other = parse_plant_part("latex gland");
    EXPECT_EQ(other.kind, PartKind::Other);
    EXPECT_EQ(other.other, "latex gland");
    EXPECT_EQ(display_name(PlantPart::of(PartKind::WholePlant)), "Whole plant");
    EXPECT_EQ(to_string(PlantPart::of(PartKind::WholePlant)), "WholePlant");
    EXPECT_EQ(code_of([] { parse_plant_part(" "); }), ErrorCode::BadRequest);
    EXPECT_TRUE(mentions_part("root decoction"));
    EXPECT_TRUE(mentions_part("boil the whole plant"));
    EXPECT_FALSE(mentions_part("decoction with pap"));
}

TEST(PlantRecordHelpers, CodesAndParts) {
    PlantRecord r;
    r.uses = {{"WI", {PlantPart::of(PartKind::Root)}, std::nullopt, std::nullopt},
              {"inf", {PlantPart::of(PartKind::Leaf)}, std::nullopt, std::nullopt},
              {"WI", {PlantPart::of(PartKind::Leaf)}, "infusion", std::nullopt}};
    EXPECT_EQ(ailment_codes(r), (std::vector<std::string>{"WI", "INF"}));
    EXPECT_EQ(parts_used(r), (std::set<PlantPart>{PlantPart::of(PartKind::Root), PlantPart::of(PartKind::Leaf)}));
}
