#pragma once
// Record serialization (canonical JSON, flat CSV) and the
// import/export operations built on it.

#include <json.hpp>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "phytobase/record.hpp"
#include "phytobase/store.hpp"

namespace phytobase {

enum class Format { Csv, Json };

std::string_view to_string(Format f);
// "csv" or "json", case-insensitive. Throws Error(BadRequest).
Format parse_format(std::string_view s);

// ---- JSON ----------------------------------------------------------------

// Keys in schema order; optional fields are always present (null when unset).
nlohmann::ordered_json record_to_json(const PlantRecord& record);
// Throws Error(BadRequest) naming the offending key.
PlantRecord record_from_json(const nlohmann::json& j);

// ---- CSV -----------------------------------------------------------------

// The eighteen data-collection columns, then Id, Conservation Status and
// Market Status.
const std::vector<std::string>& csv_header();
std::vector<std::string> record_to_csv_row(const PlantRecord& record);
// Throws Error(BadRequest) naming the offending column.
PlantRecord record_from_csv_row(const std::vector<std::string>& fields);

// ---- import / export -------------------------------------------------------

struct DecodedRecord {
    std::string locator;  // "line 7" or "record[3]"
    std::optional<PlantRecord> record;
    std::vector<Issue> issues;  // decode failures; record is empty when set
};

struct DecodedSource {
    std::vector<DecodedRecord> records;
    std::map<std::string, std::string> codes;  // extra ailment codes (JSON object form only)
};

// JSON accepts a top-level array of records, or {"codes": {...}, "records": [...]}.
// Throws Error(MalformedSource) for undecodable or structurally broken input.
DecodedSource decode_source(std::string_view source, Format format);

// Upserts every valid record; invalid ones are listed with their locator.
// `on_upsert` (optional) sees each stored record after id assignment.
ImportReport import_records(RecordStore& store, std::string_view source, Format format,
                            const std::function<void(const PlantRecord&)>& on_upsert = {},
                            const std::function<void(const std::string&, const std::string&)>& on_code = {});

struct ExportSelection {
    std::optional<std::string> ailment;       // records whose uses include this code
    std::optional<std::set<std::string>> ids;  // records with these ids
};

// Records sorted by id. Throws Error(UnknownCode) for an unknown ailment
// and Error(NotFound) for an unknown id.
std::string export_records(const RecordStore& store, const ExportSelection& selection, Format format);

}  // namespace phytobase
