#include "phytobase/store.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "phytobase/codec.hpp"
#include "phytobase/error.hpp"
#include "phytobase/text.hpp"

namespace phytobase {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

// ---- RecordStore -----------------------------------------------------------

std::uint64_t RecordStore::upsert(PlantRecord record) {
    auto report = validate(record);
    if (!report.ok()) throw Error(ErrorCode::InvalidRecord, "invalid record:\n" + report.summary());
    if (record.id.empty()) record.id = allocate_id(record);

    auto it = records_.find(record.id);
    if (it != records_.end()) {
        indexes_.remove(*it->second);
        indexes_.add(record);
        it->second = std::make_shared<const PlantRecord>(std::move(record));
    } else {
        indexes_.add(record);
        auto id = record.id;
        records_.emplace(std::move(id), std::make_shared<const PlantRecord>(std::move(record)));
    }
    return ++revision_;
}

std::uint64_t RecordStore::erase(std::string_view id) {
    auto it = records_.find(id);
    if (it == records_.end()) throw Error(ErrorCode::NotFound, "no record with id '" + std::string(id) + "'");
    indexes_.remove(*it->second);
    records_.erase(it);
    return ++revision_;
}

std::uint64_t RecordStore::register_code(std::string_view code, std::string_view full_name) {
    codes_.add(code, full_name);
    return ++revision_;
}

const PlantRecord& RecordStore::get(std::string_view id) const {
    if (const auto* r = find(id)) return *r;
    throw Error(ErrorCode::NotFound, "no record with id '" + std::string(id) + "'");
}

const PlantRecord* RecordStore::find(std::string_view id) const {
    auto it = records_.find(id);
    return it == records_.end() ? nullptr : it->second.get();
}

IndexSet RecordStore::rebuild_indexes() const {
    IndexSet fresh;
    for (const auto& [id, record] : records_) fresh.add(*record);
    return fresh;
}

std::string RecordStore::allocate_id(const PlantRecord& record) const {
    std::string base = "plant";
    try {
        base = make_slug(parse_scientific_name(record.scientific_name));
    } catch (const Error&) {
    }
    if (!contains(base)) return base;
    for (std::size_t n = 2;; ++n) {
        auto candidate = base + "-" + std::to_string(n);
        if (!contains(candidate)) return candidate;
    }
}

IndexSet rebuild_indexes(const RecordStore& store) { return store.rebuild_indexes(); }

// ---- journal & snapshot ----------------------------------------------------

std::string journal_upsert(const PlantRecord& record) {
    ordered_json j;
    j["op"] = "upsert";
    j["record"] = record_to_json(record);
    return j.dump();
}

std::string journal_erase(std::string_view id) {
    ordered_json j;
    j["op"] = "delete";
    j["id"] = std::string(id);
    return j.dump();
}

std::string journal_code(std::string_view code, std::string_view full_name) {
    ordered_json j;
    j["op"] = "code";
    j["code"] = std::string(code);
    j["full_name"] = std::string(full_name);
    return j.dump();
}

void replay_journal_line(RecordStore& store, std::string_view line) {
    try {
        auto j = json::parse(line);
        auto op = j.at("op").get<std::string>();
        if (op == "upsert") {
            store.upsert(record_from_json(j.at("record")));
        } else if (op == "delete") {
            store.erase(j.at("id").get<std::string>());
        } else if (op == "code") {
            store.register_code(j.at("code").get<std::string>(), j.at("full_name").get<std::string>());
        } else {
            throw Error(ErrorCode::CorruptSnapshot, "unknown journal op '" + op + "'");
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptSnapshot, std::string("bad journal line: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CorruptSnapshot) throw;
        throw Error(ErrorCode::CorruptSnapshot, std::string("journal entry cannot be applied: ") + e.what());
    }
}

std::string write_snapshot(const RecordStore& store) {
    ordered_json j;
    j["revision"] = store.revision();
    j["codes"] = ordered_json::object();
    for (const auto& [code, name] : store.codes().custom_entries()) j["codes"][code] = name;
    j["records"] = ordered_json::array();
    for (const auto& [id, record] : store.records()) j["records"].push_back(record_to_json(*record));
    return std::string(StoreHandle::kSnapshotHeader) + "\n" + j.dump(1) + "\n";
}

RecordStore read_snapshot(std::string_view doc) {
    auto nl = doc.find('\n');
    if (nl == std::string_view::npos || text::trim(doc.substr(0, nl)) != StoreHandle::kSnapshotHeader)
        throw Error(ErrorCode::CorruptSnapshot, "missing 'phytobase-snapshot v1' header");
    RecordStore store;
    try {
        auto j = json::parse(doc.substr(nl + 1));
        for (const auto& [code, name] : j.at("codes").items()) store.register_code(code, name.get<std::string>());
        for (const auto& r : j.at("records")) store.upsert(record_from_json(r));
        store.set_revision(j.at("revision").get<std::uint64_t>());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptSnapshot, std::string("snapshot body: ") + e.what());
    } catch (const Error& e) {
        throw Error(ErrorCode::CorruptSnapshot, std::string("snapshot body: ") + e.what());
    }
    return store;
}

// ---- StoreHandle -------------------------------------------------------------

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorCode::StoreUnavailable, "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

StoreHandle::StoreHandle(RecordStore initial) : current_(std::make_shared<const RecordStore>(std::move(initial))) {}

StoreHandle::StoreHandle(const fs::path& data_dir, bool read_only) : dir_(data_dir), read_only_(read_only) {
    std::error_code ec;
    if (!fs::exists(data_dir, ec)) {
        if (read_only) throw Error(ErrorCode::StoreUnavailable, "data path does not exist: " + data_dir.string());
        fs::create_directories(data_dir, ec);
        if (ec) throw Error(ErrorCode::StoreUnavailable, "cannot create " + data_dir.string() + ": " + ec.message());
    }

    RecordStore store;
    auto snapshot_path = data_dir / kSnapshotFile;
    if (fs::exists(snapshot_path)) store = read_snapshot(read_file(snapshot_path));

    auto log_path = data_dir / kLogFile;
    bool replayed = false;
    if (fs::exists(log_path)) {
        auto lines = text::split(read_file(log_path), '\n');
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (text::is_blank(lines[i])) continue;
            try {
                replay_journal_line(store, lines[i]);
                replayed = true;
            } catch (const Error&) {
                // A torn final line is what an interrupted append leaves behind.
                bool last = true;
                for (std::size_t k = i + 1; k < lines.size(); ++k) last = last && text::is_blank(lines[k]);
                if (!last) throw;
            }
        }
    }
    current_ = std::make_shared<const RecordStore>(std::move(store));
    if (!read_only_ && (replayed || !fs::exists(snapshot_path))) compact();
}

StoreHandle::~StoreHandle() = default;

std::shared_ptr<const RecordStore> StoreHandle::snapshot() const {
    std::lock_guard lock(read_mutex_);
    return current_;
}

void StoreHandle::mutate(const std::function<void(RecordStore&, std::vector<std::string>&)>& fn) {
    if (read_only_) throw Error(ErrorCode::ReadOnly, "store is read-only");
    std::lock_guard writer(write_mutex_);
    auto next = std::make_shared<RecordStore>(*snapshot());
    std::vector<std::string> journal;
    fn(*next, journal);
    publish(std::move(next), journal);
}

std::uint64_t StoreHandle::upsert(PlantRecord record) {
    std::uint64_t rev = 0;
    mutate([&](RecordStore& s, std::vector<std::string>& journal) {
        if (record.id.empty()) record.id = s.allocate_id(record);
        rev = s.upsert(record);
        journal.push_back(journal_upsert(record));
    });
    return rev;
}

std::uint64_t StoreHandle::erase(std::string_view id) {
    std::uint64_t rev = 0;
    mutate([&](RecordStore& s, std::vector<std::string>& journal) {
        rev = s.erase(id);
        journal.push_back(journal_erase(id));
    });
    return rev;
}

std::uint64_t StoreHandle::register_code(std::string_view code, std::string_view full_name) {
    std::uint64_t rev = 0;
    mutate([&](RecordStore& s, std::vector<std::string>& journal) {
        rev = s.register_code(code, full_name);
        journal.push_back(journal_code(text::to_upper(text::trim(code)), text::trim(full_name)));
    });
    return rev;
}

void StoreHandle::publish(std::shared_ptr<const RecordStore> next, const std::vector<std::string>& journal) {
    if (dir_ && !journal.empty()) append_log(journal);
    std::lock_guard lock(read_mutex_);
    current_ = std::move(next);
}

void StoreHandle::append_log(const std::vector<std::string>& lines) {
    std::string buffer;
    for (const auto& l : lines) buffer += l + "\n";
    std::ofstream out(*dir_ / kLogFile, std::ios::binary | std::ios::app);
    out << buffer;
    out.flush();
    if (!out) throw Error(ErrorCode::StoreUnavailable, "cannot append to operation log in " + dir_->string());
}

void StoreHandle::compact() {
    if (!dir_ || read_only_) return;
    std::lock_guard writer(write_mutex_);
    auto tmp = *dir_ / (std::string(kSnapshotFile) + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << write_snapshot(*snapshot());
        out.flush();
        if (!out) throw Error(ErrorCode::StoreUnavailable, "cannot write snapshot in " + dir_->string());
    }
    std::error_code ec;
    fs::rename(tmp, *dir_ / kSnapshotFile, ec);
    if (ec) throw Error(ErrorCode::StoreUnavailable, "cannot replace snapshot: " + ec.message());
    std::ofstream(*dir_ / kLogFile, std::ios::binary | std::ios::trunc);
}

}  // namespace phytobase
