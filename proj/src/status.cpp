#include "phytobase/status.hpp"

#include <json.hpp>
#include <sstream>

#include "phytobase/store.hpp"

namespace phytobase {

std::optional<PaperStatus> record_status(const PlantRecord& record) {
    std::optional<PaperStatus> best;
    std::optional<std::string> best_date;
    for (const auto& a : record.conservation) {
        auto status = effective_status(a);
        if (!status) continue;
        bool take = false;
        if (!best) {
            take = true;
        } else if (a.assessed_on != best_date) {
            // nullopt compares less than any date
            take = a.assessed_on > best_date;
        } else {
            take = more_severe(*status, *best);
        }
        if (take) {
            best = status;
            best_date = a.assessed_on;
        }
    }
    return best;
}

std::size_t StatusReport::count(PaperStatus s) const {
    auto it = counts.find(canonical(s));
    return it == counts.end() ? 0 : it->second;
}

StatusReport status_report(const RecordStore& store) {
    StatusReport report;
    for (auto s : kCanonicalStatuses) report.counts[s] = 0;
    for (const auto& [id, record] : store.records()) {
        if (auto s = record_status(*record)) {
            ++report.counts[canonical(*s)];
            ++report.total_assessed;
        } else {
            ++report.unassessed;
        }
    }
    return report;
}

std::string status_report_json(const StatusReport& report) {
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (auto s : kCanonicalStatuses) counts[std::string(to_string(s))] = report.count(s);
    nlohmann::ordered_json j;
    j["counts"] = counts;
    j["total_assessed"] = report.total_assessed;
    j["unassessed"] = report.unassessed;
    return j.dump();
}

std::string status_report_table(const StatusReport& report) {
    std::vector<std::pair<std::string, std::size_t>> rows;
    for (auto s : kCanonicalStatuses) rows.emplace_back(std::string(to_string(s)), report.count(s));
    rows.emplace_back("Total assessed", report.total_assessed);
    rows.emplace_back("Unassessed", report.unassessed);
    std::size_t width = 6;  // "Status"
    for (const auto& [label, _] : rows) width = std::max(width, label.size());

    std::ostringstream out;
    auto line = [&](const std::string& label, const std::string& value) {
        out << label << std::string(width - label.size() + 2, ' ') << value << '\n';
    };
    line("Status", "Count");
    for (const auto& [label, n] : rows) line(label, std::to_string(n));
    return out.str();
}

}  // namespace phytobase
