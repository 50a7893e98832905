#include "scientoscope/ranking.hpp"
#include "scientoscope/error.hpp"
#include "scientoscope/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scientoscope {

std::vector<double> midranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // tied run occupies sorted positions i+1 .. j+1
        double mid = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
        i = j + 1;
    }
    return ranks;
}

std::vector<double> percentile_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n == 0) throw ConfigError("percentile_ranks: empty cell");
    for (double v : values)
        if (!std::isfinite(v)) throw ConfigError("percentile_ranks: non-finite value");
    if (n == 1) return {50.0};
    std::vector<double> out = midranks(values);
    for (double& r : out) r = 100.0 * (r - 1.0) / (static_cast<double>(n) - 1.0);
    return out;
}

PercentileTable build_percentile_table(const Corpus& corpus, const IndicatorSet& indicators,
                                       int threads) {
    PercentileTable table;
    for (const auto& rec : indicators) {
        for (Indicator ind : kIndicators) {
            auto value = rec.value(ind);
            if (!value) continue; // CI/QI cells hold active scientists only
            CellKey key{rec.sector_code, rec.role, ind};
            table[key].push_back({rec.scientist_id, rec.cohort, *value, 0.0, 0.0});
        }
    }
    // indicators arrive sector-code/scientist-id sorted, so cells already are

    std::vector<std::vector<PercentileEntry>*> cells;
    cells.reserve(table.size());
    for (auto& [key, cell] : table) cells.push_back(&cell);
    parallel_for(cells.size(), threads, [&](std::size_t i) {
        auto& cell = *cells[i];
        std::vector<double> values(cell.size());
        for (std::size_t k = 0; k < cell.size(); ++k) values[k] = cell[k].value;
        std::vector<double> ranks = midranks(values);
        std::vector<double> percentiles = percentile_ranks(values);
        for (std::size_t k = 0; k < cell.size(); ++k) {
            cell[k].midrank = ranks[k];
            cell[k].percentile = percentiles[k];
        }
    });
    return table;
}

double cohort_mean_percentile(const std::vector<PercentileEntry>& cell, const std::string& cohort) {
    if (cell.empty()) throw ConfigError("cohort_mean_percentile: empty cell");
    double sum = 0.0;
    int n = 0;
    for (const auto& entry : cell) {
        if (entry.cohort != cohort) continue;
        sum += entry.percentile;
        ++n;
    }
    if (n == 0) throw ConfigError("cohort \"" + cohort + "\" absent from cell");
    return sum / n;
}

NotInferiorCount not_inferior_sectors(const Corpus& corpus, const PercentileTable& table,
                                      const std::string& area_code, Role role, Indicator indicator,
                                      const std::string& reference_cohort) {
    auto [first, second] = corpus.two_cohorts();
    if (reference_cohort != first && reference_cohort != second)
        throw ConfigError("reference cohort \"" + reference_cohort + "\" not present in corpus");
    const std::string& other = reference_cohort == first ? second : first;

    NotInferiorCount result;
    result.area_code = area_code;
    result.role = role;
    result.indicator = indicator;

    long long staff_comparable = 0;
    long long staff_counted = 0;
    for (const auto& sector : corpus.sectors) {
        if (sector.area_code != area_code) continue;
        auto it = table.find(CellKey{sector.code, role, indicator});
        if (it == table.end()) continue;
        const auto& cell = it->second;
        bool has_ref = false, has_other = false;
        for (const auto& entry : cell) {
            if (entry.cohort == reference_cohort) has_ref = true;
            else if (entry.cohort == other) has_other = true;
        }
        if (!has_ref || !has_other) continue; // comparison only possible with both cohorts

        // professionals of the sector and role, regardless of activity
        long long staff = 0;
        for (const auto& s : corpus.scientists)
            if (s.sector_code == sector.code && s.attributed_role == role) ++staff;

        ++result.n_comparable_sectors;
        staff_comparable += staff;
        if (cohort_mean_percentile(cell, reference_cohort) >= cohort_mean_percentile(cell, other)) {
            ++result.n_not_inferior;
            staff_counted += staff;
        }
    }
    if (result.n_comparable_sectors > 0 && staff_comparable > 0)
        result.staff_weight_share = static_cast<double>(staff_counted) / staff_comparable;
    return result;
}

} // namespace scientoscope
