#pragma once
// Conservation vocabularies: respondent opinion distributions, the survey
// status labels, and the IUCN Red List (2007) categories.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "phytobase/error.hpp"

namespace phytobase {

enum class MarketStatus { Decreased, Increased, Persistent };

std::string_view to_string(MarketStatus s);
// Accepts D/I/P and the full words, case-insensitively. Throws Error(BadRequest).
MarketStatus parse_market_status(std::string_view s);

// Declaration order is severity order, most severe first. Available and
// Common are the same category; Common is canonical.
enum class PaperStatus { Extinct, AlmostExtinct, Endangered, Threatened, Vulnerable, Rare, Available, Common };

std::string_view to_string(PaperStatus s);
// Accepts enum names and spaced forms ("Almost Extinct"), plus the
// single-letter codes E (Endangered) and V (Vulnerable). Throws Error(BadRequest).
PaperStatus parse_paper_status(std::string_view s);
PaperStatus canonical(PaperStatus s);
// Higher is more severe. Available and Common share a rank.
int severity(PaperStatus s);
bool more_severe(PaperStatus a, PaperStatus b);

inline constexpr std::array<PaperStatus, 7> kCanonicalStatuses{
    PaperStatus::Extinct,    PaperStatus::AlmostExtinct, PaperStatus::Endangered, PaperStatus::Threatened,
    PaperStatus::Vulnerable, PaperStatus::Rare,          PaperStatus::Common};

enum class IucnCategory { EX, EW, CR, EN, VU, NT, LC, DD, NE };

inline constexpr std::array<IucnCategory, 9> kIucnCategories{
    IucnCategory::EX, IucnCategory::EW, IucnCategory::CR, IucnCategory::EN, IucnCategory::VU,
    IucnCategory::NT, IucnCategory::LC, IucnCategory::DD, IucnCategory::NE};

std::string_view to_string(IucnCategory c);
std::string_view long_name(IucnCategory c);
// Accepts the two-letter code or the long name. Throws Error(BadRequest).
IucnCategory parse_iucn(std::string_view s);

// Percentages as printed by the survey; the sum is kept as given.
struct OpinionDistribution {
    double endangered_pct = 0;
    double threatened_pct = 0;
    double rare_pct = 0;
    double common_pct = 0;

    double sum() const { return endangered_pct + threatened_pct + rare_pct + common_pct; }
    bool sums_to_100() const;  // within [99, 101]
    OpinionDistribution scaled(double k) const;

    friend bool operator==(const OpinionDistribution&, const OpinionDistribution&) = default;
};

// Plurality category among Endangered/Threatened/Rare/Common; ties go to
// the more severe one. Throws Error(AllZero) when every share is zero and
// Error(BadRequest) when a share is negative or not finite.
PaperStatus classify_opinions(const OpinionDistribution& dist);

// Survey status -> IUCN category. Overridable; the default is
//   Extinct->EX, AlmostExtinct->CR, Endangered->EN, Threatened->VU,
//   Vulnerable->VU, Rare->NT, Available/Common->LC.
class IucnMapping {
public:
    static const IucnMapping& standard();

    IucnCategory operator()(PaperStatus s) const { return table_[static_cast<std::size_t>(canonical(s))]; }
    // Never DD or NE: those mean "not assessed", and a survey status is an assessment.
    void set(PaperStatus s, IucnCategory c);

private:
    std::array<IucnCategory, 8> table_{IucnCategory::EX, IucnCategory::CR, IucnCategory::EN, IucnCategory::VU,
                                       IucnCategory::VU, IucnCategory::NT, IucnCategory::LC, IucnCategory::LC};
};

IucnCategory map_status_to_iucn(PaperStatus s, const IucnMapping& mapping = IucnMapping::standard());

struct ConservationAssessment {
    std::optional<PaperStatus> paper_status;
    std::optional<IucnCategory> iucn;
    std::optional<OpinionDistribution> opinions;
    std::optional<MarketStatus> market_status;
    std::optional<std::string> assessed_on;  // YYYY-MM-DD
    // paper_status was set by hand and may disagree with the opinions.
    bool manual_override = false;

    friend bool operator==(const ConservationAssessment&, const ConservationAssessment&) = default;
};

bool is_iso_date(std::string_view s);

// The assessment's survey status: explicit paper_status, else the
// classified opinions. nullopt when neither yields a status.
std::optional<PaperStatus> effective_status(const ConservationAssessment& a);

}  // namespace phytobase
