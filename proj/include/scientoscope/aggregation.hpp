#pragma once

#include "scientoscope/indicators.hpp"
#include "scientoscope/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scientoscope {

struct PerformanceAggregate {
    std::string cohort;
    std::optional<Role> role; // absent = all roles (cells stay sector*role)
    Indicator indicator = Indicator::O;
    std::optional<double> value; // absent when no usable staff remains
    long long n_staff = 0;       // denominator after skipping zero-mean cells
    int n_sectors_used = 0;
    int n_cells_skipped = 0;
};

// Staff-weighted mean over sector cells of the cohort's mean indicator
// value relative to the cell mean. Cells whose overall mean is zero are
// skipped, with their staff removed from the denominator. CI/QI cells
// contain active scientists only.
PerformanceAggregate avg_general_performance(const Corpus& corpus, const IndicatorSet& indicators,
                                             const std::string& cohort, std::optional<Role> role,
                                             Indicator indicator);

struct ActivityGrouping {
    bool by_cohort = true;
    bool by_role = true;
    bool by_area = false;
};

struct ActivityRate {
    std::optional<std::string> cohort;
    std::optional<Role> role;
    std::optional<std::string> area;
    int n_active = 0;
    int n_total = 0;
    double rate = 0.0; // n_active / n_total
};

// Publication-activity rates per group; groups with no staff are omitted.
std::vector<ActivityRate> activity_rates(const Corpus& corpus, const ActivityGrouping& grouping);

// Signed percentage by which value_a exceeds value_b: 100*(a/b - 1).
double cohort_spread(double value_a, double value_b);

struct PublicationIntensity {
    double active_share = 0.0;
    double intensity = 0.0; // mean annual publications per active scientist
};

PublicationIntensity publication_intensity(const Corpus& corpus, const IndicatorSet& indicators,
                                           const std::string& area_code);

} // namespace scientoscope
