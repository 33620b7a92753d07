#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "phytobase/cli.hpp"
#include "phytobase/codec.hpp"
#include "phytobase/csv.hpp"
#include "phytobase/fixtures.hpp"
#include "phytobase/status.hpp"

using namespace phytobase;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string& stem) {
    std::random_device rd;
    return fs::temp_directory_path() / (stem + "-" + std::to_string(rd()));
}

}  // namespace

TEST(Cli, QueryFixture) {
    auto r = run({"query", "SELECT scientific_name FROM plants WHERE family = 'Zingiberaceae'"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "id\tscientific_name\nzingiber-officinale\tZingiber officinale Rosc\n");
}

TEST(Cli, ReportMatchesLibrary) {
    auto r = run({"report", "--fixture", "opinions"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, status_report_table(status_report(fixtures::load(fixtures::opinion_survey()))));
    r = run({"report", "--fixture", "opinions", "--format", "json"});
    EXPECT_EQ(r.out, status_report_json(status_report(fixtures::load(fixtures::opinion_survey()))) + "\n");
}

TEST(Cli, ExportByAilment) {
    auto r = run({"export", "--ailment", "WI", "--format", "csv", "--fixture", "ailments"});
    EXPECT_EQ(r.code, 0);
    auto rows = csv::parse(r.out);
    EXPECT_EQ(rows.size(), 3u);
    EXPECT_EQ(run({"export", "--ailment", "ZZZ"}).code, 1);
}

TEST(Cli, SearchAndNarrate) {
    auto r = run({"search", "--ailment", "INF", "--fixture", "ailments"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
    EXPECT_EQ(run({"search"}).code, 1);  // no criteria

    r = run({"narrate", "ageratum-conyzoides", "--lang", "en"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Medicinal uses: Urinary Tract Infections, Women Infertility."), std::string::npos) << r.out;
    EXPECT_EQ(run({"narrate", "ageratum-conyzoides", "--lang", "xx"}).code, 1);
    EXPECT_EQ(run({"narrate", "nobody"}).code, 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"query"}).code, 2);
    EXPECT_EQ(run({"export", "--bogus"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, QueryErrorsAreDomainErrors) {
    auto r = run({"query", "SELECT * FROM plants WHERE"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("ParseError"), std::string::npos);
}

TEST(Cli, ImportValidateAndReadBack) {
    auto dir = temp_path("phytobase-cli");
    auto file = temp_path("phytobase-input") ;
    file += ".csv";
    {
        std::ofstream(file, std::ios::binary) << export_records(fixtures::load(fixtures::full_corpus()), {}, Format::Csv);
    }
    auto v = run({"validate", file.string()});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(v.out, "38 records, 0 invalid\n");

    auto r = run({"import", file.string(), "--data", dir.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("imported 38, rejected 0, warnings ", 0), 0u) << r.out;

    r = run({"query", "SELECT * FROM plants WHERE ailment = 'WI'", "--data", dir.string(), "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"total\": 2"), std::string::npos);

    auto exported = run({"export", "--data", dir.string(), "--format", "csv"});
    std::ifstream in(file, std::ios::binary);
    std::string original{std::istreambuf_iterator<char>(in), {}};
    EXPECT_EQ(exported.out, original);

    {
        std::ofstream(file, std::ios::binary) << "[{\"id\": \"x\"}]";
    }
    auto bad = run({"validate", file.string(), "--format", "json"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("record[0]"), std::string::npos);

    fs::remove_all(dir);
    fs::remove(file);
}
