#pragma once

#include "scientoscope/indicators.hpp"
#include "scientoscope/types.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scientoscope {

// 1-based ascending ranks, ties averaged; input order preserved.
std::vector<double> midranks(const std::vector<double>& values);

// Linearization onto [0, 100]: 100*(r-1)/(n-1), singleton cells map to 50.
std::vector<double> percentile_ranks(const std::vector<double>& values);

struct PercentileEntry {
    std::string scientist_id;
    std::string cohort;
    double value = 0.0;
    double midrank = 0.0;
    double percentile = 0.0;
};

struct CellKey {
    std::string sector_code;
    Role role;
    Indicator indicator;
    auto operator<=>(const CellKey&) const = default;
};

// Quantity cells (O/FO/SS/FSS) hold every retained scientist of the
// sector and role, zeros included; ratio cells (CI/QI) hold active
// scientists only. Entries are in scientist-id order.
using PercentileTable = std::map<CellKey, std::vector<PercentileEntry>>;

PercentileTable build_percentile_table(const Corpus& corpus, const IndicatorSet& indicators,
                                       int threads = 1);

double cohort_mean_percentile(const std::vector<PercentileEntry>& cell, const std::string& cohort);

struct NotInferiorCount {
    std::string area_code;
    Role role;
    Indicator indicator;
    int n_comparable_sectors = 0;
    int n_not_inferior = 0;
    std::optional<double> staff_weight_share; // absent when nothing is comparable
};

// Counts the area's comparable sectors (both cohorts present in the cell)
// where the reference cohort's mean percentile is >= the other cohort's.
// The staff weight uses retained sector*role staff of comparable sectors.
NotInferiorCount not_inferior_sectors(const Corpus& corpus, const PercentileTable& table,
                                      const std::string& area_code, Role role, Indicator indicator,
                                      const std::string& reference_cohort);

} // namespace scientoscope
