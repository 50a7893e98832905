#include "scientoscope/indicators.hpp"
#include "scientoscope/error.hpp"
#include "scientoscope/parallel.hpp"

#include <algorithm>
#include <set>

namespace scientoscope {

std::optional<double> IndicatorRecord::value(Indicator ind) const {
    switch (ind) {
    case Indicator::O: return static_cast<double>(O);
    case Indicator::FO: return FO;
    case Indicator::SS: return SS;
    case Indicator::FSS: return FSS;
    case Indicator::CI: return CI;
    case Indicator::QI: return QI;
    }
    return std::nullopt;
}

std::map<std::string, SectorIFBaseline> all_sector_if_baselines(const Corpus& corpus,
                                                                const Window& window) {
    std::map<std::string, SectorIFBaseline> baselines;
    for (const auto& s : corpus.sectors) baselines[s.code].sector_code = s.code;

    std::map<std::string, double> sums;
    for (const auto& p : corpus.publications) {
        if (!window.contains(p.year)) continue;
        std::set<std::string> author_sectors;
        for (const auto& sid : p.corpus_author_ids)
            author_sectors.insert(corpus.scientist(sid).sector_code);
        const Journal& journal = corpus.journal(p.journal_id);
        for (const auto& sector : author_sectors) {
            auto& b = baselines[sector];
            if (journal.impact_factor) {
                sums[sector] += *journal.impact_factor;
                ++b.n_weighted_pubs;
            } else {
                ++b.n_missing_if;
            }
        }
    }
    for (auto& [code, b] : baselines)
        if (b.n_weighted_pubs > 0) b.mean_if = sums[code] / b.n_weighted_pubs;
    return baselines;
}

SectorIFBaseline sector_if_baseline(const Corpus& corpus, const Window& window,
                                    const std::string& sector_code) {
    corpus.sector(sector_code); // validates the code
    auto baselines = all_sector_if_baselines(corpus, window);
    return baselines.at(sector_code);
}

NormalizedWeight normalized_weight(const Publication& publication, const Corpus& corpus,
                                   const SectorIFBaseline& baseline, MissingIfPolicy policy) {
    const Journal& journal = corpus.journal(publication.journal_id);
    if (!journal.impact_factor) {
        switch (policy) {
        case MissingIfPolicy::Zero: return {0.0, true};
        case MissingIfPolicy::Impute: return {1.0, true};
        case MissingIfPolicy::Strict:
            throw ValidationError("publication \"" + publication.id + "\": journal \"" + journal.id +
                                  "\" has no impact factor (strict missing-IF policy)");
        }
    }
    if (!baseline.mean_if)
        throw ValidationError("sector \"" + baseline.sector_code +
                              "\" has no IF-bearing publications; cannot normalize publication \"" +
                              publication.id + "\"");
    return {*journal.impact_factor / *baseline.mean_if, false};
}

IndicatorSet compute_indicators(const Corpus& corpus, const Window& window, MissingIfPolicy policy,
                                int threads) {
    auto baselines = all_sector_if_baselines(corpus, window);

    // sector-code then scientist-id emission order
    std::vector<std::size_t> order(corpus.scientists.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& sa = corpus.scientists[a];
        const auto& sb = corpus.scientists[b];
        if (sa.sector_code != sb.sector_code) return sa.sector_code < sb.sector_code;
        return sa.id < sb.id;
    });

    IndicatorSet records(order.size());
    parallel_for(order.size(), threads, [&](std::size_t k) {
        std::size_t i = order[k];
        const Scientist& s = corpus.scientists[i];
        IndicatorRecord rec;
        rec.scientist_id = s.id;
        rec.cohort = s.cohort;
        rec.role = s.attributed_role.value_or(Role::Assistant);
        rec.sector_code = s.sector_code;
        const SectorIFBaseline& baseline = baselines.at(s.sector_code);
        for (std::size_t p : corpus.publications_by_scientist[i]) {
            const Publication& pub = corpus.publications[p];
            if (!window.contains(pub.year)) continue;
            rec.O += 1;
            rec.FO += 1.0 / pub.n_authors_total;
            NormalizedWeight w = normalized_weight(pub, corpus, baseline, policy);
            if (w.missing_if) ++rec.n_missing_if;
            rec.SS += w.weight;
            rec.FSS += w.weight / pub.n_authors_total;
        }
        if (rec.O > 0) {
            rec.CI = rec.FO / rec.O;
            rec.QI = rec.SS / rec.O;
        }
        records[k] = std::move(rec);
    });
    return records;
}

} // namespace scientoscope
