#pragma once
// Record-level conservation status and corpus status reports.

#include <cstddef>
#include <map>
#include <optional>

#include "phytobase/conservation.hpp"
#include "phytobase/record.hpp"

namespace phytobase {

class RecordStore;

// Survey status of one record. With several assessments the most recent
// dated one wins; undated ones lose to dated ones, and among equals the
// most severe wins. nullopt when nothing yields a status.
std::optional<PaperStatus> record_status(const PlantRecord& record);

struct StatusReport {
    std::map<PaperStatus, std::size_t> counts;  // canonical statuses only, zeros included
    std::size_t total_assessed = 0;
    std::size_t unassessed = 0;

    std::size_t count(PaperStatus s) const;

    friend bool operator==(const StatusReport&, const StatusReport&) = default;
};

StatusReport status_report(const RecordStore& store);

// {"counts": {"Extinct": n, ...}, "total_assessed": n, "unassessed": n}
std::string status_report_json(const StatusReport& report);
// Aligned two-column text table, one row per status plus totals.
std::string status_report_table(const StatusReport& report);

}  // namespace phytobase
