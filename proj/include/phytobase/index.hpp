#pragma once
// Inverted indexes over a record collection.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "phytobase/record.hpp"

namespace phytobase {

using Postings = std::map<std::string, std::set<std::string>>;

// Keys a record contributes to each index.
struct IndexKeys {
    std::set<std::string> names;     // lowercase name tokens
    std::set<std::string> ailments;  // uppercase codes
    std::set<std::string> families;  // lowercase, trimmed
    std::set<std::string> origins;   // lowercase, trimmed
};

IndexKeys index_keys(const PlantRecord& record);

struct IndexSet {
    Postings name_index;
    Postings ailment_index;
    Postings family_index;
    Postings origin_index;

    void add(const PlantRecord& record);
    // Drops the record's postings; empty posting lists are erased.
    void remove(const PlantRecord& record);
    bool empty() const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

}  // namespace phytobase
