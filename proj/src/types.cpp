#include "scientoscope/types.hpp"
#include "scientoscope/error.hpp"

#include <algorithm>
#include <set>

namespace scientoscope {

std::string to_string(Role role) {
    switch (role) {
    case Role::Full: return "full";
    case Role::Associate: return "associate";
    case Role::Assistant: return "assistant";
    }
    return "?";
}

Role role_from_string(const std::string& s) {
    if (s == "full") return Role::Full;
    if (s == "associate") return Role::Associate;
    if (s == "assistant") return Role::Assistant;
    throw ValidationError("unknown role \"" + s + "\" (expected assistant, associate or full)");
}

std::string to_string(Indicator ind) {
    switch (ind) {
    case Indicator::O: return "O";
    case Indicator::SS: return "SS";
    case Indicator::FO: return "FO";
    case Indicator::FSS: return "FSS";
    case Indicator::QI: return "QI";
    case Indicator::CI: return "CI";
    }
    return "?";
}

Indicator indicator_from_string(const std::string& s) {
    for (Indicator ind : kIndicators)
        if (to_string(ind) == s) return ind;
    throw ConfigError("unknown indicator \"" + s + "\"");
}

const EmploymentRecord* Scientist::record_for(int year) const {
    for (const auto& rec : employment)
        if (rec.year == year) return &rec;
    return nullptr;
}

void Corpus::rebuild_indexes() {
    scientist_index.clear();
    publication_index.clear();
    journal_index.clear();
    sector_index.clear();
    for (std::size_t i = 0; i < scientists.size(); ++i) scientist_index[scientists[i].id] = i;
    for (std::size_t i = 0; i < publications.size(); ++i) publication_index[publications[i].id] = i;
    for (std::size_t i = 0; i < journals.size(); ++i) journal_index[journals[i].id] = i;
    for (std::size_t i = 0; i < sectors.size(); ++i) sector_index[sectors[i].code] = i;

    publications_by_scientist.assign(scientists.size(), {});
    for (std::size_t p = 0; p < publications.size(); ++p) {
        for (const auto& sid : publications[p].corpus_author_ids) {
            auto it = scientist_index.find(sid);
            if (it != scientist_index.end()) publications_by_scientist[it->second].push_back(p);
        }
    }
}

const Scientist& Corpus::scientist(const std::string& id) const {
    auto it = scientist_index.find(id);
    if (it == scientist_index.end()) throw ValidationError("unknown scientist id \"" + id + "\"");
    return scientists[it->second];
}

const Sector& Corpus::sector(const std::string& code) const {
    auto it = sector_index.find(code);
    if (it == sector_index.end()) throw ValidationError("unknown sector code \"" + code + "\"");
    return sectors[it->second];
}

const Journal& Corpus::journal(const std::string& id) const {
    auto it = journal_index.find(id);
    if (it == journal_index.end()) throw ValidationError("unknown journal id \"" + id + "\"");
    return journals[it->second];
}

std::vector<std::string> Corpus::cohort_labels() const {
    std::set<std::string> labels;
    for (const auto& s : scientists) labels.insert(s.cohort);
    return {labels.begin(), labels.end()};
}

std::pair<std::string, std::string> Corpus::two_cohorts() const {
    auto labels = cohort_labels();
    if (labels.size() != 2)
        throw ConfigError("cohort comparison requires exactly two distinct cohort labels, found " +
                          std::to_string(labels.size()));
    return {labels[0], labels[1]};
}

} // namespace scientoscope
