#include "scientoscope/aggregation.hpp"
#include "scientoscope/corpus.hpp"
#include "scientoscope/error.hpp"

#include <map>
#include <tuple>

namespace scientoscope {

PerformanceAggregate avg_general_performance(const Corpus& corpus, const IndicatorSet& indicators,
                                             const std::string& cohort, std::optional<Role> role,
                                             Indicator indicator) {
    PerformanceAggregate agg;
    agg.cohort = cohort;
    agg.role = role;
    agg.indicator = indicator;

    struct CellSums {
        double cohort_sum = 0.0;
        long long cohort_n = 0;
        double total_sum = 0.0;
        long long total_n = 0;
    };
    // comparisons stay within sector*role cells even when aggregating roles
    std::map<std::pair<std::string, Role>, CellSums> cells;
    for (const auto& rec : indicators) {
        if (role && rec.role != *role) continue;
        auto value = rec.value(indicator);
        if (!value) continue;
        auto& cell = cells[{rec.sector_code, rec.role}];
        cell.total_sum += *value;
        ++cell.total_n;
        if (rec.cohort == cohort) {
            cell.cohort_sum += *value;
            ++cell.cohort_n;
        }
    }

    double weighted = 0.0;
    for (const auto& [key, cell] : cells) {
        if (cell.cohort_n == 0) continue;
        double cell_mean = cell.total_sum / cell.total_n;
        if (cell_mean == 0.0) {
            ++agg.n_cells_skipped;
            continue;
        }
        double cohort_mean = cell.cohort_sum / cell.cohort_n;
        weighted += cohort_mean / cell_mean * static_cast<double>(cell.cohort_n);
        agg.n_staff += cell.cohort_n;
        ++agg.n_sectors_used;
    }
    if (agg.n_staff > 0) agg.value = weighted / static_cast<double>(agg.n_staff);
    return agg;
}

std::vector<ActivityRate> activity_rates(const Corpus& corpus, const ActivityGrouping& grouping) {
    using Key = std::tuple<std::string, int, std::string>; // cohort, role, area ("" = aggregated)
    std::map<Key, std::pair<int, int>> counts;            // active, total
    for (const auto& s : corpus.scientists) {
        Key key{grouping.by_cohort ? s.cohort : "",
                grouping.by_role && s.attributed_role ? static_cast<int>(*s.attributed_role) : -1,
                grouping.by_area ? corpus.sector(s.sector_code).area_code : ""};
        auto& [active, total] = counts[key];
        ++total;
        if (active_flag(corpus, corpus.window, s.id)) ++active;
    }
    std::vector<ActivityRate> rates;
    rates.reserve(counts.size());
    for (const auto& [key, count] : counts) {
        ActivityRate r;
        if (grouping.by_cohort) r.cohort = std::get<0>(key);
        if (grouping.by_role && std::get<1>(key) >= 0) r.role = static_cast<Role>(std::get<1>(key));
        if (grouping.by_area) r.area = std::get<2>(key);
        r.n_active = count.first;
        r.n_total = count.second;
        r.rate = static_cast<double>(r.n_active) / r.n_total;
        rates.push_back(std::move(r));
    }
    return rates;
}

double cohort_spread(double value_a, double value_b) {
    if (value_b <= 0.0) throw ConfigError("cohort_spread: reference value must be positive");
    return 100.0 * (value_a / value_b - 1.0);
}

PublicationIntensity publication_intensity(const Corpus& corpus, const IndicatorSet& indicators,
                                           const std::string& area_code) {
    long long n_total = 0, n_active = 0, output = 0;
    for (const auto& rec : indicators) {
        if (corpus.sector(rec.sector_code).area_code != area_code) continue;
        ++n_total;
        if (rec.O > 0) {
            ++n_active;
            output += rec.O;
        }
    }
    if (n_total == 0) throw ConfigError("area \"" + area_code + "\" has no retained scientists");
    if (n_active == 0) throw ConfigError("area \"" + area_code + "\" has no active scientists");
    PublicationIntensity result;
    result.active_share = static_cast<double>(n_active) / n_total;
    result.intensity = static_cast<double>(output) / (static_cast<double>(n_active) * corpus.window.length());
    return result;
}

} // namespace scientoscope
