#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace scientoscope {

enum class Role { Full, Associate, Assistant };

inline constexpr std::array<Role, 3> kRoles = {Role::Full, Role::Associate, Role::Assistant};

std::string to_string(Role role);
Role role_from_string(const std::string& s);

// Paper-table order: quantity first, then strength, fractional, ratios.
enum class Indicator { O, SS, FO, FSS, QI, CI };

inline constexpr std::array<Indicator, 6> kIndicators = {
    Indicator::O, Indicator::SS, Indicator::FO, Indicator::FSS, Indicator::QI, Indicator::CI};

std::string to_string(Indicator ind);
Indicator indicator_from_string(const std::string& s);

// Inclusive observation window.
struct Window {
    int start_year = 2001;
    int end_year = 2003;

    bool contains(int year) const { return year >= start_year && year <= end_year; }
    int length() const { return end_year - start_year + 1; }
};

struct EmploymentRecord {
    int year = 0;
    Role role = Role::Assistant;
    std::string sector_code;
};

struct Scientist {
    std::string id;
    std::string cohort;
    std::string sector_code; // nominal at load; window sector once filtered
    std::vector<EmploymentRecord> employment; // strictly increasing years
    std::optional<Role> attributed_role;      // set by the window filter

    const EmploymentRecord* record_for(int year) const;
};

struct Sector {
    std::string code;
    std::string area_code;
    std::string name;
};

struct Journal {
    std::string id;
    std::optional<double> impact_factor;
};

struct Publication {
    std::string id;
    int year = 0;
    std::string journal_id;
    int n_authors_total = 0; // all co-authors, corpus members and externals
    std::vector<std::string> corpus_author_ids;
};

struct FilterReport {
    int ingested = 0;
    int removed_late_hire = 0;
    int removed_early_exit = 0;
    int removed_gap_year = 0;
    int removed_sector_change = 0;
    int retained = 0;
    int role_reattributions = 0;
    int publications_dropped = 0;

    int removed_total() const {
        return removed_late_hire + removed_early_exit + removed_gap_year + removed_sector_change;
    }
    bool all_zero() const { return removed_total() == 0 && role_reattributions == 0 && publications_dropped == 0; }
};

// Immutable after load + filter; downstream operations are pure reads.
struct Corpus {
    std::vector<Scientist> scientists;   // sorted by id
    std::vector<Publication> publications; // sorted by id
    std::vector<Journal> journals;
    std::vector<Sector> sectors;
    std::vector<std::string> areas; // canonical output order
    Window window;
    bool filtered = false;

    std::unordered_map<std::string, std::size_t> scientist_index;
    std::unordered_map<std::string, std::size_t> publication_index;
    std::unordered_map<std::string, std::size_t> journal_index;
    std::unordered_map<std::string, std::size_t> sector_index;
    // per scientist, publication indexes, in publication-id order
    std::vector<std::vector<std::size_t>> publications_by_scientist;

    void rebuild_indexes();

    const Scientist& scientist(const std::string& id) const;
    const Sector& sector(const std::string& code) const;
    const Journal& journal(const std::string& id) const;

    bool has_scientist(const std::string& id) const { return scientist_index.count(id) > 0; }

    // Distinct cohort labels among scientists, sorted.
    std::vector<std::string> cohort_labels() const;
    // Exactly two labels or throws ConfigError.
    std::pair<std::string, std::string> two_cohorts() const;
};

} // namespace scientoscope
