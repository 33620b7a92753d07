#pragma once
// Bundled sample corpora transcribed from the field survey tables.

#include <string>
#include <vector>

#include "phytobase/record.hpp"
#include "phytobase/store.hpp"

namespace phytobase::fixtures {

// Eight plants with Yoruba names, parts used and ailment codes.
std::vector<PlantRecord> ailment_extract();

// One printed row of the traded-plant opinion survey.
struct OpinionRow {
    std::string plant;
    double endangered, threatened, rare, common;
};
// All eighteen rows in printed order (Rauwolfia vomitoria appears twice).
const std::vector<OpinionRow>& opinion_rows();
// The opinion rows as records: one per distinct plant, repeated rows
// become additional assessments. Each assessment also carries the
// hand-classified status.
std::vector<PlantRecord> opinion_survey();

// Fourteen plants with market status and conservation status (E/V).
std::vector<PlantRecord> market_extract();

// Union of the three, merging records that share an id.
std::vector<PlantRecord> full_corpus();

RecordStore load(const std::vector<PlantRecord>& records);

}  // namespace phytobase::fixtures
