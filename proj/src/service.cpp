#include "phytobase/service.hpp"

#include <httplib.h>

#include <map>

#include "phytobase/codec.hpp"
#include "phytobase/status.hpp"
#include "phytobase/text.hpp"

namespace phytobase {

using nlohmann::ordered_json;

void parse_bind(std::string_view bind, ServiceConfig& config) {
    auto colon = bind.rfind(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::BadRequest, "bind address must be host:port");
    auto host = bind.substr(0, colon);
    auto port = bind.substr(colon + 1);
    int value = 0;
    if (port.empty() || port.size() > 5) throw Error(ErrorCode::BadRequest, "bad port in " + std::string(bind));
    for (char c : port) {
        if (c < '0' || c > '9') throw Error(ErrorCode::BadRequest, "bad port in " + std::string(bind));
        value = value * 10 + (c - '0');
    }
    if (value > 65535) throw Error(ErrorCode::BadRequest, "bad port in " + std::string(bind));
    config.host = host.empty() ? "127.0.0.1" : std::string(host);
    config.port = value;
}

ordered_json ApiError::to_json() const {
    ordered_json j;
    j["status"] = status;
    j["code"] = code;
    j["message"] = message;
    if (span)
        j["span"] = {{"start", span->start}, {"end", span->end}};
    else
        j["span"] = nullptr;
    return j;
}

namespace {

struct Mapping {
    int status;
    const char* code;
};

Mapping mapping(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotFound: return {404, "NOT_FOUND"};
        case ErrorCode::LexError:
        case ErrorCode::ParseError: return {400, "PARSE_ERROR"};
        case ErrorCode::UnknownField: return {400, "UNKNOWN_FIELD"};
        case ErrorCode::UnknownCode: return {400, "UNKNOWN_CODE"};
        case ErrorCode::EmptyName:
        case ErrorCode::MalformedName:
        case ErrorCode::InvalidRecord: return {422, "INVALID_RECORD"};
        case ErrorCode::UnknownLanguage: return {400, "UNKNOWN_LANGUAGE"};
        case ErrorCode::EmptyCriteria: return {400, "EMPTY_CRITERIA"};
        case ErrorCode::AllZero:
        case ErrorCode::BadRequest: return {400, "BAD_REQUEST"};
        case ErrorCode::ReadOnly: return {403, "READ_ONLY"};
        case ErrorCode::StoreUnavailable:
        case ErrorCode::CorruptSnapshot: return {503, "STORE_UNAVAILABLE"};
        case ErrorCode::MalformedSource: return {400, "MALFORMED_SOURCE"};
        case ErrorCode::BindFailure: return {500, "INTERNAL"};
    }
    return {500, "INTERNAL"};
}

void send_json(httplib::Response& res, const ordered_json& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, const ApiError& e) { send_json(res, e.to_json(), e.status); }

// Runs a handler, turning every escaping exception into an ApiError.
template <typename Fn>
auto guarded(Fn fn) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
        try {
            fn(req, res);
        } catch (const Error& e) {
            send_error(res, to_api_error(e));
        } catch (const nlohmann::json::exception& e) {
            send_error(res, ApiError{400, "BAD_REQUEST", std::string("invalid JSON: ") + e.what(), std::nullopt});
        } catch (const std::exception& e) {
            send_error(res, ApiError{500, "INTERNAL", e.what(), std::nullopt});
        }
    };
}

std::vector<std::pair<std::string, std::string>> params_of(const httplib::Request& req) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, v] : req.params) out.emplace_back(k, v);
    return out;
}

std::optional<std::string> single_param(const httplib::Request& req, const std::string& key) {
    auto n = req.get_param_value_count(key);
    if (n == 0) return std::nullopt;
    if (n > 1) throw Error(ErrorCode::BadRequest, "parameter '" + key + "' given more than once");
    return req.get_param_value(key);
}

}  // namespace

const std::vector<std::string>& api_error_codes() {
    static const std::vector<std::string> codes{
        "NOT_FOUND",        "PARSE_ERROR", "UNKNOWN_FIELD", "UNKNOWN_CODE",      "INVALID_RECORD",   "UNKNOWN_LANGUAGE",
        "EMPTY_CRITERIA",   "BAD_REQUEST", "READ_ONLY",     "STORE_UNAVAILABLE", "MALFORMED_SOURCE", "INTERNAL",
    };
    return codes;
}

ApiError to_api_error(const Error& e) {
    auto m = mapping(e.code());
    return ApiError{m.status, m.code, e.what(), e.span()};
}

ordered_json row_to_json(const pql::Row& row, const std::vector<pql::Field>& columns) {
    ordered_json j;
    j["id"] = row.id;
    for (std::size_t i = 0; i < columns.size() && i < row.values.size(); ++i)
        j[std::string(pql::to_string(columns[i]))] = row.values[i];
    return j;
}

ordered_json result_set_to_json(const pql::ResultSet& rs) {
    ordered_json j;
    j["columns"] = ordered_json::array();
    for (auto f : rs.columns) j["columns"].push_back(std::string(pql::to_string(f)));
    j["rows"] = ordered_json::array();
    for (const auto& row : rs.rows) j["rows"].push_back(row_to_json(row, rs.columns));
    j["total"] = rs.total;
    return j;
}

ordered_json manifest_to_json(const ManifestResult& m) {
    ordered_json j;
    j["items"] = ordered_json::array();
    for (const auto& item : m.manifest.items) {
        ordered_json e;
        e["kind"] = std::string(to_string(item.kind));
        e["uri"] = item.uri;
        e["caption"] = item.caption ? ordered_json(*item.caption) : ordered_json(nullptr);
        j["items"].push_back(std::move(e));
    }
    j["warnings"] = m.warnings;
    return j;
}

ordered_json codes_to_json(const CodeTable& codes) {
    ordered_json j = ordered_json::array();
    for (const auto& [code, name] : codes.entries())
        j.push_back({{"code", code}, {"name", name}, {"builtin", codes.is_builtin(code)}});
    return j;
}

pql::SearchCriteria criteria_from_params(const std::vector<std::pair<std::string, std::string>>& params) {
    static const std::map<std::string, pql::Field> filters{
        {"ailment", pql::Field::Ailment},
        {"family", pql::Field::Family},
        {"part_used", pql::Field::PartUsed},
        {"area_of_origin", pql::Field::AreaOfOrigin},
        {"name", pql::Field::Name},
        {"status", pql::Field::Status},
    };
    pql::SearchCriteria criteria;
    for (const auto& [key, value] : params) {
        auto it = filters.find(key);
        if (it == filters.end()) throw Error(ErrorCode::UnknownField, "unknown filter '" + key + "'");
        if (!criteria.emplace(it->second, value).second)
            throw Error(ErrorCode::BadRequest, "filter '" + key + "' given more than once");
    }
    return criteria;
}

// ---- Service -------------------------------------------------------------------

Service::Service(ServiceConfig config) : config_(std::move(config)) {
    if (config_.data_path)
        store_ = std::make_shared<StoreHandle>(*config_.data_path, config_.read_only);
    else
        store_ = std::make_shared<StoreHandle>();
    catalog_ = LabelCatalog::bundled();
    if (config_.labels_dir) catalog_.load_directory(*config_.labels_dir);
    routes();
}

Service::Service(ServiceConfig config, std::shared_ptr<StoreHandle> store)
    : config_(std::move(config)), store_(std::move(store)) {
    catalog_ = LabelCatalog::bundled();
    if (config_.labels_dir) catalog_.load_directory(*config_.labels_dir);
    routes();
}

Service::~Service() { stop(); }

void Service::start() {
    if (config_.port == 0)
        port_ = server_->bind_to_any_port(config_.host);
    else
        port_ = server_->bind_to_port(config_.host, config_.port) ? config_.port : -1;
    if (port_ <= 0)
        throw Error(ErrorCode::BindFailure,
                    "cannot bind " + config_.host + ":" + std::to_string(config_.port));
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
}

void Service::wait() {
    if (thread_.joinable()) thread_.join();
}

void Service::stop() {
    if (server_) server_->stop();
    if (thread_.joinable()) thread_.join();
}

void Service::routes() {
    server_ = std::make_unique<httplib::Server>();
    auto& srv = *server_;
    // httplib defaults to SO_REUSEPORT, which would let a second instance
    // share the port silently instead of failing to bind.
    srv.set_socket_options([](auto sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    const bool read_only = config_.read_only || store_->read_only();

    auto reject_read_only = [read_only] {
        if (read_only) throw Error(ErrorCode::ReadOnly, "service is read-only");
    };

    srv.Get("/plants", guarded([this](const httplib::Request& req, httplib::Response& res) {
        auto store = store_->snapshot();
        auto params = params_of(req);
        pql::ResultSet rs;
        if (params.empty()) {
            pql::Query q;
            q.projection = pql::summary_fields();
            rs = pql::evaluate_query(q, *store);
        } else {
            rs = pql::structured_search(criteria_from_params(params), *store);
        }
        ordered_json body = ordered_json::array();
        for (const auto& row : rs.rows) body.push_back(row_to_json(row, rs.columns));
        send_json(res, body);
    }));

    srv.Get(R"(/plants/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
        auto store = store_->snapshot();
        send_json(res, record_to_json(store->get(req.matches[1].str())));
    }));

    srv.Put(R"(/plants/([^/]+))", guarded([this, reject_read_only](const httplib::Request& req, httplib::Response& res) {
        reject_read_only();
        auto id = req.matches[1].str();
        nlohmann::json body;
        try {
            body = nlohmann::json::parse(req.body);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::BadRequest, std::string("body is not JSON: ") + e.what());
        }
        if (body.is_object() && !body.contains("id")) body["id"] = id;
        auto record = record_from_json(body);
        if (record.id != id)
            throw Error(ErrorCode::BadRequest, "body id '" + record.id + "' does not match path id '" + id + "'");
        auto revision = store_->upsert(std::move(record));
        send_json(res, {{"id", id}, {"revision", revision}});
    }));

    srv.Delete(R"(/plants/([^/]+))", guarded([this, reject_read_only](const httplib::Request& req, httplib::Response& res) {
        reject_read_only();
        auto id = req.matches[1].str();
        auto revision = store_->erase(id);
        send_json(res, {{"id", id}, {"revision", revision}});
    }));

    srv.Post("/query", guarded([this](const httplib::Request& req, httplib::Response& res) {
        auto query = pql::parse_query(req.body);
        auto store = store_->snapshot();
        send_json(res, result_set_to_json(pql::evaluate_query(query, *store)));
    }));

    srv.Get("/report/status", guarded([this](const httplib::Request&, httplib::Response& res) {
        auto store = store_->snapshot();
        res.status = 200;
        res.set_content(status_report_json(status_report(*store)), "application/json");
    }));

    srv.Get(R"(/plants/([^/]+)/narration)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        auto lang_param = single_param(req, "lang");
        LanguageTag lang = lang_param ? LanguageTag(*lang_param) : config_.default_language;
        auto store = store_->snapshot();
        const auto& record = store->get(req.matches[1].str());
        NarrationContext ctx{store->codes(), catalog_, nullptr};
        auto script = build_narration(record, lang, ctx, store->revision());
        res.status = 200;
        res.set_content(render_narration_plaintext(script), "text/plain; charset=utf-8");
    }));

    srv.Get(R"(/plants/([^/]+)/media)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        auto store = store_->snapshot();
        send_json(res, manifest_to_json(media_manifest(store->get(req.matches[1].str()))));
    }));

    srv.Get("/export", guarded([this](const httplib::Request& req, httplib::Response& res) {
        for (const auto& [key, value] : req.params)
            if (key != "ailment" && key != "format")
                throw Error(ErrorCode::BadRequest, "unknown export parameter '" + key + "'");
        ExportSelection selection;
        selection.ailment = single_param(req, "ailment");
        auto format_param = single_param(req, "format");
        auto format = format_param ? parse_format(*format_param) : Format::Json;
        auto store = store_->snapshot();
        res.status = 200;
        res.set_content(export_records(*store, selection, format),
                        format == Format::Csv ? "text/csv; charset=utf-8" : "application/json");
    }));

    srv.Get("/meta/codes", guarded([this](const httplib::Request&, httplib::Response& res) {
        send_json(res, codes_to_json(store_->snapshot()->codes()));
    }));

    srv.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty() && res.status == 404)
            send_error(res, ApiError{404, "NOT_FOUND", "no such endpoint", std::nullopt});
    });
}

}  // namespace phytobase
