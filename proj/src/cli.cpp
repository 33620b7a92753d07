#include "phytobase/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "phytobase/codec.hpp"
#include "phytobase/fixtures.hpp"
#include "phytobase/narration.hpp"
#include "phytobase/pql.hpp"
#include "phytobase/service.hpp"
#include "phytobase/status.hpp"
#include "phytobase/store.hpp"
#include "phytobase/text.hpp"

namespace phytobase {

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_signal(int) { g_interrupted = true; }

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::StoreUnavailable, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Format guess_format(const std::string& path, const std::string& flag) {
    if (!flag.empty()) return parse_format(flag);
    auto lower = text::to_lower(path);
    if (lower.size() >= 4 && lower.compare(lower.size() - 4, 4, ".csv") == 0) return Format::Csv;
    return Format::Json;
}

RecordStore fixture_store(const std::string& name) {
    if (name == "ailments") return fixtures::load(fixtures::ailment_extract());
    if (name == "opinions") return fixtures::load(fixtures::opinion_survey());
    if (name == "market") return fixtures::load(fixtures::market_extract());
    if (name == "full") return fixtures::load(fixtures::full_corpus());
    throw Error(ErrorCode::BadRequest, "unknown fixture '" + name + "' (ailments, opinions, market, full)");
}

struct Options {
    std::string data;
    std::string fixture;
    std::string format;
    std::string lang;
    std::string bind = "127.0.0.1:8080";
    bool read_only = false;
};

// Read-only view for the read commands: the data directory when given,
// otherwise a bundled fixture corpus.
std::shared_ptr<const RecordStore> open_for_reading(const Options& o) {
    if (!o.data.empty()) return StoreHandle(o.data, true).snapshot();
    return std::make_shared<const RecordStore>(fixture_store(o.fixture.empty() ? "full" : o.fixture));
}

std::string cell(const pql::Value& v) { return text::join(v, "; "); }

void print_table(const pql::ResultSet& rs, std::ostream& out) {
    std::vector<std::string> header{"id"};
    for (auto f : rs.columns) header.emplace_back(pql::to_string(f));
    out << text::join(header, "\t") << "\n";
    for (const auto& row : rs.rows) {
        std::vector<std::string> cells{row.id};
        for (const auto& v : row.values) cells.push_back(cell(v));
        out << text::join(cells, "\t") << "\n";
    }
}

void print_results(const pql::ResultSet& rs, const Options& o, std::ostream& out) {
    if (!o.format.empty() && parse_format(o.format) == Format::Json)
        out << result_set_to_json(rs).dump(2) << "\n";
    else
        print_table(rs, out);
}

void print_report(const ValidationReport& report, const std::string& locator, std::ostream& err) {
    for (const auto& i : report.errors) err << locator << ": error: " << i.field << ": " << i.message << "\n";
    for (const auto& i : report.warnings) err << locator << ": warning: " << i.field << ": " << i.message << "\n";
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Medicinal plant knowledge base"};
    app.require_subcommand(1);
    Options o;

    auto add_data = [&](CLI::App* sub) {
        sub->add_option("--data", o.data, "Data directory (snapshot and operation log)");
    };
    auto add_fixture = [&](CLI::App* sub) {
        sub->add_option("--fixture", o.fixture, "Bundled corpus to use without --data: ailments, opinions, market, full");
    };

    std::string import_path;
    auto* import_cmd = app.add_subcommand("import", "Import records from a CSV or JSON file");
    import_cmd->add_option("file", import_path, "Input file, or - for stdin")->required();
    import_cmd->add_option("--data", o.data, "Data directory")->required();
    import_cmd->add_option("--format", o.format, "csv or json (default: from the file extension)");

    std::string export_ailment;
    std::vector<std::string> export_ids;
    auto* export_cmd = app.add_subcommand("export", "Export records as CSV or JSON");
    add_data(export_cmd);
    add_fixture(export_cmd);
    export_cmd->add_option("--format", o.format, "csv or json")->default_str("json");
    export_cmd->add_option("--ailment", export_ailment, "Only records used for this ailment code");
    export_cmd->add_option("--id", export_ids, "Only these record ids");

    std::string validate_path;
    auto* validate_cmd = app.add_subcommand("validate", "Check a CSV or JSON file without importing it");
    validate_cmd->add_option("file", validate_path, "Input file, or - for stdin")->required();
    validate_cmd->add_option("--format", o.format, "csv or json (default: from the file extension)");

    std::string query_text;
    auto* query_cmd = app.add_subcommand("query", "Run a PQL SELECT statement");
    query_cmd->add_option("pql", query_text, "Query text")->required();
    add_data(query_cmd);
    add_fixture(query_cmd);
    query_cmd->add_option("--format", o.format, "Output: table (default) or json");

    std::map<std::string, std::string> search_values;
    auto* search_cmd = app.add_subcommand("search", "Search by any combination of characteristics");
    add_data(search_cmd);
    add_fixture(search_cmd);
    search_cmd->add_option("--format", o.format, "Output: table (default) or json");
    for (const char* key : {"ailment", "family", "part_used", "area_of_origin", "name", "status"})
        search_cmd->add_option(std::string("--") + key, search_values[key]);

    auto* report_cmd = app.add_subcommand("report", "Conservation status report");
    add_data(report_cmd);
    add_fixture(report_cmd);
    report_cmd->add_option("--format", o.format, "Output: table (default) or json");

    std::string narrate_id;
    std::string labels_dir;
    auto* narrate_cmd = app.add_subcommand("narrate", "Narration script for one record");
    narrate_cmd->add_option("id", narrate_id, "Record id")->required();
    add_data(narrate_cmd);
    add_fixture(narrate_cmd);
    narrate_cmd->add_option("--lang", o.lang, "Language tag")->default_str("en");
    narrate_cmd->add_option("--labels", labels_dir, "Directory of <tag>.labels overrides");

    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
    add_data(serve_cmd);
    serve_cmd->add_option("--bind", o.bind, "host:port")->default_str("127.0.0.1:8080");
    serve_cmd->add_flag("--read-only", o.read_only, "Reject mutating requests");
    serve_cmd->add_option("--lang", o.lang, "Default narration language");
    serve_cmd->add_option("--labels", labels_dir, "Directory of <tag>.labels overrides");

    std::vector<std::string> argv_storage{"phytobase"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "phytobase: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*import_cmd) {
            auto format = guess_format(import_path, o.format);
            auto source = read_input(import_path);
            StoreHandle handle(o.data, false);
            ImportReport report;
            handle.mutate([&](RecordStore& store, std::vector<std::string>& journal) {
                report = import_records(
                    store, source, format, [&](const PlantRecord& r) { journal.push_back(journal_upsert(r)); },
                    [&](const std::string& code, const std::string& name) {
                        journal.push_back(journal_code(code, name));
                    });
            });
            for (const auto& [locator, rep] : report.rejected) print_report(rep, locator, err);
            out << "imported " << report.imported << ", rejected " << report.rejected.size() << ", warnings "
                << report.warnings << "\n";
            return report.rejected.empty() ? 0 : 1;
        }
        if (*export_cmd) {
            auto store = open_for_reading(o);
            ExportSelection selection;
            if (!export_ailment.empty()) selection.ailment = export_ailment;
            if (!export_ids.empty()) selection.ids = std::set<std::string>(export_ids.begin(), export_ids.end());
            out << export_records(*store, selection, parse_format(o.format.empty() ? "json" : o.format));
            return 0;
        }
        if (*validate_cmd) {
            auto format = guess_format(validate_path, o.format);
            auto decoded = decode_source(read_input(validate_path), format);
            CodeTable codes = CodeTable::builtin();
            for (const auto& [code, name] : decoded.codes) codes.add(code, name);
            std::size_t bad = 0;
            for (const auto& d : decoded.records) {
                ValidationReport rep;
                if (d.record)
                    rep = validate_record(*d.record, codes);
                else
                    rep.errors = d.issues;
                print_report(rep, d.locator, err);
                if (!rep.ok()) ++bad;
            }
            out << decoded.records.size() << " records, " << bad << " invalid\n";
            return bad == 0 ? 0 : 1;
        }
        if (*query_cmd) {
            auto query = pql::parse_query(query_text);
            auto store = open_for_reading(o);
            print_results(pql::evaluate_query(query, *store), o, out);
            return 0;
        }
        if (*search_cmd) {
            std::vector<std::pair<std::string, std::string>> params;
            for (const auto& [key, value] : search_values)
                if (!value.empty()) params.emplace_back(key, value);
            auto criteria = criteria_from_params(params);
            auto store = open_for_reading(o);
            print_results(pql::structured_search(criteria, *store), o, out);
            return 0;
        }
        if (*report_cmd) {
            auto store = open_for_reading(o);
            auto report = status_report(*store);
            if (!o.format.empty() && parse_format(o.format) == Format::Json)
                out << status_report_json(report) << "\n";
            else
                out << status_report_table(report);
            return 0;
        }
        if (*narrate_cmd) {
            auto store = open_for_reading(o);
            LabelCatalog catalog = LabelCatalog::bundled();
            if (!labels_dir.empty()) catalog.load_directory(labels_dir);
            NarrationContext ctx{store->codes(), catalog, nullptr};
            auto script = build_narration(store->get(narrate_id), LanguageTag(o.lang.empty() ? "en" : o.lang), ctx,
                                          store->revision());
            out << render_narration_plaintext(script);
            return 0;
        }
        if (*serve_cmd) {
            ServiceConfig config;
            parse_bind(o.bind, config);
            if (!o.data.empty()) config.data_path = o.data;
            config.read_only = o.read_only;
            if (!o.lang.empty()) config.default_language = LanguageTag(o.lang);
            if (!labels_dir.empty()) config.labels_dir = labels_dir;
            Service service(config);
            if (o.data.empty()) {
                auto corpus = fixtures::load(fixtures::full_corpus());
                service.store().mutate([&](RecordStore& s, std::vector<std::string>&) { s = corpus; });
            }
            service.start();
            out << "listening on " << config.host << ":" << service.port() << std::endl;
            g_interrupted = false;
            auto previous_int = std::signal(SIGINT, on_signal);
            auto previous_term = std::signal(SIGTERM, on_signal);
            while (!g_interrupted) std::this_thread::sleep_for(std::chrono::milliseconds(100));
            service.stop();
            std::signal(SIGINT, previous_int);
            std::signal(SIGTERM, previous_term);
            return 0;
        }
    } catch (const Error& e) {
        err << "phytobase: " << to_string(e.code()) << ": " << e.what() << "\n";
        if (e.span()) err << "  at offset " << e.span()->start << ".." << e.span()->end << "\n";
        return 1;
    }
    return 2;
}

}  // namespace phytobase
