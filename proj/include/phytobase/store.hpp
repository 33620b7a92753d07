#pragma once
// Record store with inverted indexes, plus a thread-safe persistent handle.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phytobase/error.hpp"
#include "phytobase/index.hpp"
#include "phytobase/record.hpp"
#include "phytobase/validation.hpp"

namespace phytobase {

using RecordMap = std::map<std::string, std::shared_ptr<const PlantRecord>, std::less<>>;

// Plain value: copying a store is cheap-ish (records are shared), and every
// copy is independent. Not synchronized; see StoreHandle for that.
class RecordStore {
public:
    RecordStore() : codes_(CodeTable::builtin()) {}

    // Validates, assigns an id when the record has none, replaces any record
    // with the same id. Throws Error(InvalidRecord). Returns the new revision.
    std::uint64_t upsert(PlantRecord record);
    // Throws Error(NotFound).
    std::uint64_t erase(std::string_view id);
    // Registers a corpus-specific ailment code. Throws Error(BadRequest).
    std::uint64_t register_code(std::string_view code, std::string_view full_name);

    // Throws Error(NotFound).
    const PlantRecord& get(std::string_view id) const;
    const PlantRecord* find(std::string_view id) const;
    bool contains(std::string_view id) const { return records_.find(id) != records_.end(); }

    std::size_t size() const { return records_.size(); }
    std::uint64_t revision() const { return revision_; }
    const RecordMap& records() const { return records_; }
    const IndexSet& indexes() const { return indexes_; }
    const CodeTable& codes() const { return codes_; }

    ValidationReport validate(const PlantRecord& record) const { return validate_record(record, codes_); }
    // Fresh indexes computed from the records alone.
    IndexSet rebuild_indexes() const;
    // "genus-epithet", or "genus-epithet-N" with the smallest free N >= 2.
    std::string allocate_id(const PlantRecord& record) const;

    // Restores a persisted revision counter.
    void set_revision(std::uint64_t revision) { revision_ = revision; }

private:
    RecordMap records_;
    IndexSet indexes_;
    CodeTable codes_;
    std::uint64_t revision_ = 0;
};

IndexSet rebuild_indexes(const RecordStore& store);

struct ImportReport {
    std::size_t imported = 0;
    std::vector<std::pair<std::string, ValidationReport>> rejected;  // locator, reasons
    std::size_t warnings = 0;
};

// Thread-safe handle: one writer at a time, readers take immutable
// snapshots. With a data directory every mutation is appended to an
// operation log before it becomes visible; opening the directory replays
// the log onto the snapshot and compacts the two.
class StoreHandle {
public:
    // In-memory only.
    explicit StoreHandle(RecordStore initial = {});
    // Loads `data_dir`. Throws Error(CorruptSnapshot) or Error(StoreUnavailable).
    StoreHandle(const std::filesystem::path& data_dir, bool read_only);
    ~StoreHandle();

    StoreHandle(const StoreHandle&) = delete;
    StoreHandle& operator=(const StoreHandle&) = delete;

    std::shared_ptr<const RecordStore> snapshot() const;
    bool read_only() const { return read_only_; }

    // All mutators throw Error(ReadOnly) in read-only mode.
    std::uint64_t upsert(PlantRecord record);
    std::uint64_t erase(std::string_view id);
    std::uint64_t register_code(std::string_view code, std::string_view full_name);
    // Applies a batch transformation atomically with respect to readers.
    // `fn` receives a working copy and a sink for journal entries.
    void mutate(const std::function<void(RecordStore&, std::vector<std::string>& journal)>& fn);

    // Writes a fresh snapshot and truncates the log.
    void compact();

    static constexpr std::string_view kSnapshotHeader = "phytobase-snapshot v1";
    static constexpr std::string_view kSnapshotFile = "phytobase.snapshot";
    static constexpr std::string_view kLogFile = "phytobase.log";

private:
    void publish(std::shared_ptr<const RecordStore> next, const std::vector<std::string>& journal);
    void append_log(const std::vector<std::string>& lines);

    mutable std::mutex read_mutex_;
    std::mutex write_mutex_;
    std::shared_ptr<const RecordStore> current_;
    std::optional<std::filesystem::path> dir_;
    bool read_only_ = false;
};

// Journal lines, one JSON object each.
std::string journal_upsert(const PlantRecord& record);
std::string journal_erase(std::string_view id);
std::string journal_code(std::string_view code, std::string_view full_name);
// Applies one journal line. Throws Error(CorruptSnapshot) on bad input.
void replay_journal_line(RecordStore& store, std::string_view line);

// Snapshot document: header line then canonical JSON.
std::string write_snapshot(const RecordStore& store);
RecordStore read_snapshot(std::string_view document);

}  // namespace phytobase
