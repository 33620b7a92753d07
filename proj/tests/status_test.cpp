#include <gtest/gtest.h>

#include <json.hpp>

#include "phytobase/fixtures.hpp"
#include "phytobase/status.hpp"
#include "phytobase/store.hpp"

using namespace phytobase;

namespace {

ConservationAssessment assessed(PaperStatus s, std::optional<std::string> date = std::nullopt) {
    ConservationAssessment a;
    a.paper_status = s;
    a.assessed_on = std::move(date);
    return a;
}

}  // namespace

TEST(RecordStatus, MostRecentDatedWins) {
    PlantRecord r;
    r.conservation = {assessed(PaperStatus::Endangered, "2009-01-01"), assessed(PaperStatus::Rare, "2011-06-30"),
                      assessed(PaperStatus::Extinct)};
    EXPECT_EQ(record_status(r), PaperStatus::Rare);
}

TEST(RecordStatus, UndatedMostSevereWins) {
    PlantRecord r;
    EXPECT_EQ(record_status(r), std::nullopt);
    ConservationAssessment a;
    a.opinions = OpinionDistribution{24, 64, 8, 4};
    r.conservation = {a, assessed(PaperStatus::Endangered), assessed(PaperStatus::Available)};
    EXPECT_EQ(record_status(r), PaperStatus::Endangered);
}

TEST(StatusReport, CountsEveryCanonicalStatus) {
    auto report = status_report(fixtures::load(fixtures::market_extract()));
    EXPECT_EQ(report.counts.size(), 7u);
    EXPECT_EQ(report.count(PaperStatus::Endangered), 9u);
    EXPECT_EQ(report.count(PaperStatus::Vulnerable), 5u);
    EXPECT_EQ(report.count(PaperStatus::Extinct), 0u);
    EXPECT_EQ(report.total_assessed, 14u);
    EXPECT_EQ(report.unassessed, 0u);

    auto empty = status_report(fixtures::load(fixtures::ailment_extract()));
    EXPECT_EQ(empty.total_assessed, 0u);
    EXPECT_EQ(empty.unassessed, 8u);
}

TEST(StatusReport, AvailableCountsAsCommon) {
    RecordStore s;
    PlantRecord r;
    r.id = "a-b";
    r.scientific_name = "Aa bb";
    r.conservation = {assessed(PaperStatus::Available)};
    s.upsert(r);
    EXPECT_EQ(status_report(s).count(PaperStatus::Common), 1u);
    EXPECT_EQ(status_report(s).count(PaperStatus::Available), 1u);
}

TEST(StatusReport, Renderings) {
    auto report = status_report(fixtures::load(fixtures::opinion_survey()));
    auto j = nlohmann::json::parse(status_report_json(report));
    EXPECT_EQ(j["counts"]["Endangered"], 10);
    EXPECT_EQ(j["counts"]["Threatened"], 7);
    EXPECT_EQ(j["counts"].size(), 7u);
    EXPECT_EQ(j["total_assessed"], 17);
    auto table = status_report_table(report);
    EXPECT_NE(table.find("Endangered      10"), std::string::npos) << table;
    EXPECT_NE(table.find("Threatened      7"), std::string::npos) << table;
}
