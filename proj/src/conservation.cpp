#include "phytobase/conservation.hpp"

#include <cmath>

#include "phytobase/error.hpp"
#include "phytobase/text.hpp"

namespace phytobase {

std::string_view to_string(MarketStatus s) {
    switch (s) {
        case MarketStatus::Decreased: return "Decreased";
        case MarketStatus::Increased: return "Increased";
        case MarketStatus::Persistent: return "Persistent";
    }
    return "Persistent";
}

MarketStatus parse_market_status(std::string_view raw) {
    auto s = text::to_lower(text::trim(raw));
    if (s == "d" || s == "decreased") return MarketStatus::Decreased;
    if (s == "i" || s == "increased") return MarketStatus::Increased;
    if (s == "p" || s == "persistent") return MarketStatus::Persistent;
    throw Error(ErrorCode::BadRequest, "unknown market status '" + std::string(raw) + "'");
}

std::string_view to_string(PaperStatus s) {
    switch (s) {
        case PaperStatus::Extinct: return "Extinct";
        case PaperStatus::AlmostExtinct: return "AlmostExtinct";
        case PaperStatus::Endangered: return "Endangered";
        case PaperStatus::Threatened: return "Threatened";
        case PaperStatus::Vulnerable: return "Vulnerable";
        case PaperStatus::Rare: return "Rare";
        case PaperStatus::Available: return "Available";
        case PaperStatus::Common: return "Common";
    }
    return "Common";
}

PaperStatus parse_paper_status(std::string_view raw) {
    std::string s;
    for (char c : text::to_lower(text::trim(raw)))
        if (c != ' ' && c != '_' && c != '-') s += c;
    if (s == "extinct") return PaperStatus::Extinct;
    if (s == "almostextinct") return PaperStatus::AlmostExtinct;
    if (s == "endangered" || s == "e") return PaperStatus::Endangered;
    if (s == "threatened") return PaperStatus::Threatened;
    if (s == "vulnerable" || s == "v") return PaperStatus::Vulnerable;
    if (s == "rare") return PaperStatus::Rare;
    if (s == "available") return PaperStatus::Available;
    if (s == "common") return PaperStatus::Common;
    throw Error(ErrorCode::BadRequest, "unknown conservation status '" + std::string(raw) + "'");
}

PaperStatus canonical(PaperStatus s) { return s == PaperStatus::Available ? PaperStatus::Common : s; }

int severity(PaperStatus s) {
    switch (canonical(s)) {
        case PaperStatus::Extinct: return 6;
        case PaperStatus::AlmostExtinct: return 5;
        case PaperStatus::Endangered: return 4;
        case PaperStatus::Threatened: return 3;
        case PaperStatus::Vulnerable: return 2;
        case PaperStatus::Rare: return 1;
        default: return 0;
    }
}

bool more_severe(PaperStatus a, PaperStatus b) { return severity(a) > severity(b); }

std::string_view to_string(IucnCategory c) {
    switch (c) {
        case IucnCategory::EX: return "EX";
        case IucnCategory::EW: return "EW";
        case IucnCategory::CR: return "CR";
        case IucnCategory::EN: return "EN";
        case IucnCategory::VU: return "VU";
        case IucnCategory::NT: return "NT";
        case IucnCategory::LC: return "LC";
        case IucnCategory::DD: return "DD";
        case IucnCategory::NE: return "NE";
    }
    return "NE";
}

std::string_view long_name(IucnCategory c) {
    switch (c) {
        case IucnCategory::EX: return "Extinct";
        case IucnCategory::EW: return "Extinct in the Wild";
        case IucnCategory::CR: return "Critically Endangered";
        case IucnCategory::EN: return "Endangered";
        case IucnCategory::VU: return "Vulnerable";
        case IucnCategory::NT: return "Near Threatened";
        case IucnCategory::LC: return "Least Concern";
        case IucnCategory::DD: return "Data Deficient";
        case IucnCategory::NE: return "Not Evaluated";
    }
    return "Not Evaluated";
}

IucnCategory parse_iucn(std::string_view raw) {
    auto s = text::trim(raw);
    for (auto c : kIucnCategories)
        if (text::iequals(s, to_string(c)) || text::iequals(s, long_name(c))) return c;
    throw Error(ErrorCode::BadRequest, "unknown IUCN category '" + std::string(raw) + "'");
}

bool OpinionDistribution::sums_to_100() const {
    double total = sum();
    return total >= 99.0 && total <= 101.0;
}

OpinionDistribution OpinionDistribution::scaled(double k) const {
    return {endangered_pct * k, threatened_pct * k, rare_pct * k, common_pct * k};
}

PaperStatus classify_opinions(const OpinionDistribution& dist) {
    // Most severe first, so strict '>' keeps the severe category on ties.
    const std::array<std::pair<double, PaperStatus>, 4> shares{{
        {dist.endangered_pct, PaperStatus::Endangered},
        {dist.threatened_pct, PaperStatus::Threatened},
        {dist.rare_pct, PaperStatus::Rare},
        {dist.common_pct, PaperStatus::Common},
    }};
    for (const auto& [pct, _] : shares)
        if (!std::isfinite(pct) || pct < 0)
            throw Error(ErrorCode::BadRequest, "opinion percentages must be finite and non-negative");
    const auto* best = &shares[0];
    for (const auto& entry : shares)
        if (entry.first > best->first) best = &entry;
    if (best->first == 0) throw Error(ErrorCode::AllZero, "all opinion percentages are zero");
    return best->second;
}

void IucnMapping::set(PaperStatus s, IucnCategory c) {
    if (c == IucnCategory::DD || c == IucnCategory::NE)
        throw Error(ErrorCode::BadRequest, "a survey status cannot map to DD or NE");
    table_[static_cast<std::size_t>(canonical(s))] = c;
    if (canonical(s) == PaperStatus::Common) table_[static_cast<std::size_t>(PaperStatus::Available)] = c;
}

const IucnMapping& IucnMapping::standard() {
    static const IucnMapping mapping;
    return mapping;
}

IucnCategory map_status_to_iucn(PaperStatus s, const IucnMapping& mapping) { return mapping(s); }

bool is_iso_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9})
        if (s[i] < '0' || s[i] > '9') return false;
    int month = (s[5] - '0') * 10 + (s[6] - '0');
    int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

std::optional<PaperStatus> effective_status(const ConservationAssessment& a) {
    if (a.paper_status) return canonical(*a.paper_status);
    if (a.opinions) {
        try {
            return classify_opinions(*a.opinions);
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace phytobase
