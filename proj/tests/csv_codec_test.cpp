#include <gtest/gtest.h>

#include "phytobase/codec.hpp"
#include "phytobase/csv.hpp"
#include "phytobase/fixtures.hpp"

using namespace phytobase;

namespace {

PlantRecord find_fixture(const std::string& id) {
    for (auto& r : fixtures::full_corpus())
        if (r.id == id) return r;
    throw std::runtime_error("no fixture " + id);
}

}  // namespace

TEST(Codec, JsonRoundTripEveryFixture) {
    for (const auto& r : fixtures::full_corpus()) {
        auto j = record_to_json(r);
        EXPECT_EQ(record_from_json(nlohmann::json::parse(j.dump())), r) << r.id;
    }
}

TEST(Codec, JsonKeysInSchemaOrderWithNulls) {
    auto j = record_to_json(find_fixture("asparagus-racemosus"));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    ASSERT_GE(keys.size(), 3u);
    EXPECT_EQ(keys[0], "id");
    EXPECT_EQ(keys[1], "scientific_name");
    EXPECT_TRUE(j.contains("toxicity"));
    EXPECT_TRUE(j["toxicity"].is_null());
}

TEST(Codec, JsonStrictness) {
    auto j = nlohmann::json::parse(record_to_json(find_fixture("ficus-capensis")).dump());
    j["colour"] = "green";
    try {
        record_from_json(j);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadRequest);
        EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
    }
    j.erase("colour");
    j["family"] = 7;
    EXPECT_THROW(record_from_json(j), Error);
}

TEST(Codec, CsvRoundTripEveryFixture) {
    for (const auto& r : fixtures::full_corpus()) {
        auto row = record_to_csv_row(r);
        EXPECT_EQ(row.size(), csv_header().size());
        EXPECT_EQ(record_from_csv_row(row), r) << r.id;
    }
}

TEST(Codec, CsvHeaderStartsWithCollectionColumns) {
    const auto& h = csv_header();
    ASSERT_EQ(h.size(), 21u);
    EXPECT_EQ(h.front(), "Scientific/Botanical Name");
    EXPECT_EQ(h[17], "Published Source(s)");
    EXPECT_EQ(h[18], "Id");
}

TEST(Codec, CsvAcceptsCollectionColumnsOnly) {
    std::vector<std::string> header(csv_header().begin(), csv_header().begin() + 18);
    std::vector<std::string> row(18);
    row[0] = "Ocimum gratissimum L.";
    row[1] = "Lamiaceae";
    row[4] = "Efinrin";
    row[6] = "DYS:Leaf:leaf infusion";
    row[17] = "field notes";
    auto doc = csv::format_row(header) + csv::format_row(row);
    RecordStore store;
    auto report = import_records(store, doc, Format::Csv);
    EXPECT_EQ(report.imported, 1u);
    ASSERT_TRUE(store.contains("ocimum-gratissimum"));
    const auto& r = store.get("ocimum-gratissimum");
    ASSERT_EQ(r.uses.size(), 1u);
    EXPECT_EQ(r.uses[0].preparation, "leaf infusion");
    EXPECT_EQ(r.local_names[0].language.code(), "yo");
}

TEST(Codec, SpecialCharactersSurviveCsv) {
    auto r = find_fixture("zingiber-officinale");
    r.common_names.push_back("Pipe|and\\slash");
    r.description = "Line one\nline two, \"quoted\"";
    r.local_names.push_back({"Cìtàr@ho", LanguageTag("ha")});
    auto doc = csv::format_row(csv_header()) + csv::format_row(record_to_csv_row(r));
    auto decoded = decode_source(doc, Format::Csv);
    ASSERT_EQ(decoded.records.size(), 1u);
    ASSERT_TRUE(decoded.records[0].record);
    EXPECT_EQ(*decoded.records[0].record, r);
}

TEST(Codec, DecodeErrors) {
    EXPECT_THROW(decode_source("{not json", Format::Json), Error);
    EXPECT_THROW(decode_source("\"a string\"", Format::Json), Error);
    EXPECT_THROW(decode_source("\xFF\xFE", Format::Csv), Error);
    EXPECT_THROW(decode_source("Wrong,Header\r\n", Format::Csv), Error);
    try {
        decode_source("[]\xC3", Format::Json);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedSource);
    }
}

TEST(Codec, ImportCollectsRejectsWithLocators) {
    auto good = record_to_json(find_fixture("ficus-capensis"));
    auto bad = good;
    bad["id"] = "other";
    bad["uses"][0]["ailment"] = "XYZ";
    nlohmann::ordered_json doc = nlohmann::ordered_json::array({good, bad, {{"bogus", 1}}});
    RecordStore store;
    auto report = import_records(store, doc.dump(), Format::Json);
    EXPECT_EQ(report.imported, 1u);
    ASSERT_EQ(report.rejected.size(), 2u);
    EXPECT_EQ(report.rejected[0].first, "record[1]");
    EXPECT_EQ(report.rejected[1].first, "record[2]");
    EXPECT_TRUE(store.contains("ficus-capensis"));
}

TEST(Codec, ImportObjectFormRegistersCodes) {
    auto rec = record_to_json(find_fixture("ficus-capensis"));
    rec["uses"][0]["ailment"] = "MAL";
    nlohmann::ordered_json doc{{"codes", {{"MAL", "Malaria"}}}, {"records", {rec}}};
    RecordStore store;
    std::vector<std::string> seen;
    auto report = import_records(store, doc.dump(), Format::Json, {},
                                 [&](const std::string& c, const std::string&) { seen.push_back(c); });
    EXPECT_EQ(report.imported, 1u);
    EXPECT_EQ(seen, (std::vector<std::string>{"MAL"}));
    EXPECT_TRUE(store.codes().contains("MAL"));
}

TEST(Codec, ExportSelection) {
    auto store = fixtures::load(fixtures::ailment_extract());
    auto csv_doc = export_records(store, {std::string("WI"), std::nullopt}, Format::Csv);
    auto rows = csv::parse(csv_doc);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1].fields[0], "Acalypha villicaulis Hoschst");
    EXPECT_EQ(rows[2].fields[0], "Ageratum conyzoides L");

    auto json_doc = export_records(store, {std::nullopt, std::set<std::string>{"ficus-capensis"}}, Format::Json);
    EXPECT_EQ(nlohmann::json::parse(json_doc).size(), 1u);
    EXPECT_EQ(json_doc.back(), '\n');

    EXPECT_EQ(export_records(RecordStore{}, {}, Format::Json), "[]\n");
    try {
        export_records(store, {std::string("NOPE"), std::nullopt}, Format::Csv);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownCode);
    }
    try {
        export_records(store, {std::nullopt, std::set<std::string>{"nobody"}}, Format::Json);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotFound);
    }
}

TEST(Codec, FormatNames) {
    EXPECT_EQ(parse_format("CSV"), Format::Csv);
    EXPECT_EQ(parse_format("json"), Format::Json);
    EXPECT_THROW(parse_format("xml"), Error);
}
