#pragma once

#include "scientoscope/config.hpp"
#include "scientoscope/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scientoscope {

// Publication-occurrence-weighted mean impact factor of a sector's window
// publications. A publication counts once per sector no matter how many of
// the sector's scientists co-authored it.
struct SectorIFBaseline {
    std::string sector_code;
    std::optional<double> mean_if; // absent when no publication carries an IF
    int n_weighted_pubs = 0;       // IF-bearing occurrences in the mean
    int n_missing_if = 0;          // occurrences excluded for missing IF
};

struct IndicatorRecord {
    std::string scientist_id;
    std::string cohort;
    Role role = Role::Assistant;
    std::string sector_code;
    int O = 0;
    double FO = 0.0;
    std::optional<double> CI; // FO/O, defined iff O > 0
    double SS = 0.0;
    double FSS = 0.0;
    std::optional<double> QI; // SS/O, defined iff O > 0
    int n_missing_if = 0;     // window publications weighted under a missing IF

    // Value on the requested axis; absent for CI/QI when O = 0.
    std::optional<double> value(Indicator ind) const;
};

using IndicatorSet = std::vector<IndicatorRecord>; // sector-code, scientist-id order

SectorIFBaseline sector_if_baseline(const Corpus& corpus, const Window& window,
                                    const std::string& sector_code);

std::map<std::string, SectorIFBaseline> all_sector_if_baselines(const Corpus& corpus,
                                                                const Window& window);

// impact_factor / baseline mean. Missing IF resolves per policy: Zero gives
// weight 0, Impute gives weight 1, Strict throws.
struct NormalizedWeight {
    double weight = 0.0;
    bool missing_if = false;
};
NormalizedWeight normalized_weight(const Publication& publication, const Corpus& corpus,
                                   const SectorIFBaseline& baseline, MissingIfPolicy policy);

IndicatorSet compute_indicators(const Corpus& corpus, const Window& window,
                                MissingIfPolicy policy = MissingIfPolicy::Zero, int threads = 1);

} // namespace scientoscope
