#pragma once
// HTTP front end over a StoreHandle. Every response body is a plain
// serialization of a library result.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "phytobase/error.hpp"
#include "phytobase/language.hpp"
#include "phytobase/media.hpp"
#include "phytobase/narration.hpp"
#include "phytobase/pql.hpp"
#include "phytobase/store.hpp"

namespace httplib {
class Server;
}

namespace phytobase {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;  // 0 picks a free port
    std::optional<std::filesystem::path> data_path;  // in-memory store when unset
    bool read_only = false;
    LanguageTag default_language{"en"};
    std::optional<std::filesystem::path> labels_dir;  // *.labels overrides
};

// Parses "host:port" or ":port". Throws Error(BadRequest).
void parse_bind(std::string_view bind, ServiceConfig& config);

struct ApiError {
    int status = 500;
    std::string code;
    std::string message;
    std::optional<Span> span;

    nlohmann::ordered_json to_json() const;
};

// The closed set of ApiError codes, in no particular order.
const std::vector<std::string>& api_error_codes();
ApiError to_api_error(const Error& e);

// ---- response bodies ---------------------------------------------------------

nlohmann::ordered_json result_set_to_json(const pql::ResultSet& rs);
nlohmann::ordered_json row_to_json(const pql::Row& row, const std::vector<pql::Field>& columns);
nlohmann::ordered_json manifest_to_json(const ManifestResult& m);
nlohmann::ordered_json codes_to_json(const CodeTable& codes);

// Maps query-string filters onto criteria. Throws Error(UnknownField) for
// an unknown name and Error(BadRequest) for a repeated one.
pql::SearchCriteria criteria_from_params(const std::vector<std::pair<std::string, std::string>>& params);

class Service {
public:
    // Opens the store. Throws Error(CorruptSnapshot) or Error(StoreUnavailable).
    explicit Service(ServiceConfig config);
    // Serves an existing handle (used by tests and the CLI).
    Service(ServiceConfig config, std::shared_ptr<StoreHandle> store);
    ~Service();

    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    // Binds and serves on a background thread. Throws Error(BindFailure).
    void start();
    // Blocks until stop() is called from elsewhere.
    void wait();
    void stop();
    int port() const { return port_; }

    StoreHandle& store() { return *store_; }

private:
    void routes();

    ServiceConfig config_;
    std::shared_ptr<StoreHandle> store_;
    LabelCatalog catalog_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    int port_ = 0;
};

}  // namespace phytobase
