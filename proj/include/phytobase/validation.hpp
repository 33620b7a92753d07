#pragma once

#include <string>
#include <vector>

#include "phytobase/language.hpp"
#include "phytobase/record.hpp"

namespace phytobase {

struct Issue {
    std::string field;  // path such as "uses[2].ailment"
    std::string message;

    friend bool operator==(const Issue&, const Issue&) = default;
};

// Errors block storage; warnings never do.
struct ValidationReport {
    std::vector<Issue> errors;
    std::vector<Issue> warnings;

    bool ok() const { return errors.empty(); }
    bool has_error(std::string_view field) const;
    bool has_warning(std::string_view field) const;
    // One line per issue, "error: field: message".
    std::string summary() const;
};

ValidationReport validate_record(const PlantRecord& record, const CodeTable& codes = CodeTable::builtin(),
                                 const LanguageRegistry& languages = LanguageRegistry::bundled());

}  // namespace phytobase
