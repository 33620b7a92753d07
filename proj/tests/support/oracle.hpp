#pragma once
// Reference implementations written without the library's evaluator,
// index or classifier, used as oracles by the property tests.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "phytobase/pql.hpp"
#include "phytobase/record.hpp"

namespace oracle {

// Plurality over (E, T, R, C) with ties broken toward E; nullopt when all zero.
std::optional<phytobase::PaperStatus> plurality(double e, double t, double r, double c);

std::vector<std::string> values(const phytobase::PlantRecord& r, phytobase::pql::Field f);
bool holds(const phytobase::pql::Expr& e, const phytobase::PlantRecord& r);
std::set<std::string> scan(const phytobase::pql::Expr& e, const std::vector<phytobase::PlantRecord>& records);

}  // namespace oracle
