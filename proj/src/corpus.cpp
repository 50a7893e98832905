#include "scientoscope/corpus.hpp"
#include "scientoscope/csv.hpp"
#include "scientoscope/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace scientoscope {

namespace {

int parse_int(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(ctx + ": expected integer, got \"" + s + "\"");
    }
}

double parse_double(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(ctx + ": expected number, got \"" + s + "\"");
    }
}

struct YearColumns {
    int year;
    std::size_t role_col;
    std::size_t sector_col;
};

std::vector<YearColumns> scan_year_columns(const csv::Table& table) {
    std::vector<YearColumns> cols;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        const std::string& name = table.header[i];
        if (name.rfind("role_", 0) != 0) continue;
        std::string year_str = name.substr(5);
        int year = parse_int(year_str, table.path + ": header column \"" + name + "\"");
        int sector_col = table.find_column("sector_" + year_str);
        if (sector_col < 0)
            throw ValidationError(table.path + ": column \"" + name + "\" has no matching \"sector_" +
                                  year_str + "\"");
        cols.push_back({year, i, static_cast<std::size_t>(sector_col)});
    }
    std::sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) { return a.year < b.year; });
    for (std::size_t i = 1; i < cols.size(); ++i)
        if (cols[i].year == cols[i - 1].year)
            throw ValidationError(table.path + ": duplicate year columns for " +
                                  std::to_string(cols[i].year));
    return cols;
}

} // namespace

Corpus load_corpus(const std::string& scientists_path, const std::string& publications_path,
                   const std::string& authorships_path, const std::string& journals_path,
                   const std::string& sectors_path, const RunConfig& config) {
    Corpus corpus;
    corpus.window = config.window;

    // sectors.csv: code,area_code,name
    {
        csv::Table table = csv::read_file(sectors_path);
        std::size_t c_code = table.column("code");
        std::size_t c_area = table.column("area_code");
        std::size_t c_name = table.column("name");
        std::unordered_set<std::string> seen;
        for (const auto& row : table.rows) {
            Sector s{row.at(c_code), row.at(c_area), row.at(c_name)};
            std::string ctx = file_context(sectors_path, row.line);
            if (s.code.empty()) throw ValidationError(ctx + ": empty sector code");
            if (!seen.insert(s.code).second)
                throw ValidationError(ctx + ": duplicate sector code \"" + s.code + "\"");
            corpus.sectors.push_back(std::move(s));
        }
    }
    std::sort(corpus.sectors.begin(), corpus.sectors.end(),
              [](const Sector& a, const Sector& b) { return a.code < b.code; });

    // Canonical area order: configured list, or sorted distinct codes.
    if (!config.areas.empty()) {
        std::unordered_set<std::string> allowed(config.areas.begin(), config.areas.end());
        for (const auto& s : corpus.sectors)
            if (!allowed.count(s.area_code))
                throw ValidationError(sectors_path + ": sector \"" + s.code + "\" has area \"" +
                                      s.area_code + "\" not in the configured area list");
        corpus.areas = config.areas;
    } else {
        std::set<std::string> areas;
        for (const auto& s : corpus.sectors) areas.insert(s.area_code);
        corpus.areas.assign(areas.begin(), areas.end());
    }

    std::unordered_set<std::string> sector_codes;
    for (const auto& s : corpus.sectors) sector_codes.insert(s.code);

    // journals.csv: id,impact_factor (empty = missing)
    {
        csv::Table table = csv::read_file(journals_path);
        std::size_t c_id = table.column("id");
        std::size_t c_if = table.column("impact_factor");
        std::unordered_set<std::string> seen;
        for (const auto& row : table.rows) {
            Journal j;
            j.id = row.at(c_id);
            std::string ctx = file_context(journals_path, row.line);
            if (j.id.empty()) throw ValidationError(ctx + ": empty journal id");
            if (!seen.insert(j.id).second)
                throw ValidationError(ctx + ": duplicate journal id \"" + j.id + "\"");
            const std::string& raw_if = row.at(c_if);
            if (!raw_if.empty()) {
                double v = parse_double(raw_if, ctx);
                if (v < 0) throw ValidationError(ctx + ": impact_factor must be >= 0, got " + raw_if);
                j.impact_factor = v;
            }
            corpus.journals.push_back(std::move(j));
        }
    }
    std::sort(corpus.journals.begin(), corpus.journals.end(),
              [](const Journal& a, const Journal& b) { return a.id < b.id; });
    std::unordered_set<std::string> journal_ids;
    for (const auto& j : corpus.journals) journal_ids.insert(j.id);

    // scientists.csv: id,<cohort>,sector_code plus role_YYYY/sector_YYYY pairs
    {
        csv::Table table = csv::read_file(scientists_path);
        std::size_t c_id = table.column("id");
        std::size_t c_cohort = table.column(config.cohort_attribute);
        std::size_t c_sector = table.column("sector_code");
        auto year_cols = scan_year_columns(table);
        std::unordered_set<std::string> seen;
        for (const auto& row : table.rows) {
            Scientist s;
            s.id = row.at(c_id);
            s.cohort = row.at(c_cohort);
            s.sector_code = row.at(c_sector);
            std::string ctx = file_context(scientists_path, row.line);
            if (s.id.empty()) throw ValidationError(ctx + ": empty scientist id");
            if (!seen.insert(s.id).second)
                throw ValidationError(ctx + ": duplicate scientist id \"" + s.id + "\"");
            if (s.cohort.empty())
                throw ValidationError(ctx + ": empty " + config.cohort_attribute + " for \"" + s.id + "\"");
            if (!sector_codes.count(s.sector_code))
                throw ValidationError(ctx + ": scientist \"" + s.id + "\" references unknown sector \"" +
                                      s.sector_code + "\"");
            for (const auto& yc : year_cols) {
                const std::string& role_str = row.at(yc.role_col);
                const std::string& sector_str = row.at(yc.sector_col);
                if (role_str.empty() && sector_str.empty()) continue;
                if (role_str.empty() || sector_str.empty())
                    throw ValidationError(ctx + ": year " + std::to_string(yc.year) +
                                          " must set both role and sector or neither");
                if (!sector_codes.count(sector_str))
                    throw ValidationError(ctx + ": scientist \"" + s.id + "\" year " +
                                          std::to_string(yc.year) + " references unknown sector \"" +
                                          sector_str + "\"");
                EmploymentRecord rec;
                rec.year = yc.year;
                rec.sector_code = sector_str;
                try {
                    rec.role = role_from_string(role_str);
                } catch (const ValidationError& e) {
                    throw ValidationError(ctx + ": " + e.what());
                }
                s.employment.push_back(std::move(rec));
            }
            // year_cols are sorted, so employment years are strictly increasing
            corpus.scientists.push_back(std::move(s));
        }
    }
    std::sort(corpus.scientists.begin(), corpus.scientists.end(),
              [](const Scientist& a, const Scientist& b) { return a.id < b.id; });
    std::unordered_set<std::string> scientist_ids;
    for (const auto& s : corpus.scientists) scientist_ids.insert(s.id);

    // publications.csv: id,year,journal_id,n_authors_total
    {
        csv::Table table = csv::read_file(publications_path);
        std::size_t c_id = table.column("id");
        std::size_t c_year = table.column("year");
        std::size_t c_journal = table.column("journal_id");
        std::size_t c_n = table.column("n_authors_total");
        std::unordered_set<std::string> seen;
        for (const auto& row : table.rows) {
            Publication p;
            p.id = row.at(c_id);
            std::string ctx = file_context(publications_path, row.line);
            if (p.id.empty()) throw ValidationError(ctx + ": empty publication id");
            if (!seen.insert(p.id).second)
                throw ValidationError(ctx + ": duplicate publication id \"" + p.id + "\"");
            p.year = parse_int(row.at(c_year), ctx);
            p.journal_id = row.at(c_journal);
            if (!journal_ids.count(p.journal_id))
                throw ValidationError(ctx + ": publication \"" + p.id + "\" references unknown journal \"" +
                                      p.journal_id + "\"");
            p.n_authors_total = parse_int(row.at(c_n), ctx);
            if (p.n_authors_total < 1)
                throw ValidationError(ctx + ": n_authors_total must be >= 1 for \"" + p.id + "\"");
            corpus.publications.push_back(std::move(p));
        }
    }
    std::sort(corpus.publications.begin(), corpus.publications.end(),
              [](const Publication& a, const Publication& b) { return a.id < b.id; });
    std::unordered_map<std::string, std::size_t> pub_index;
    for (std::size_t i = 0; i < corpus.publications.size(); ++i)
        pub_index[corpus.publications[i].id] = i;

    // authorships.csv: publication_id,scientist_id
    {
        csv::Table table = csv::read_file(authorships_path);
        std::size_t c_pub = table.column("publication_id");
        std::size_t c_sci = table.column("scientist_id");
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& row : table.rows) {
            const std::string& pid = row.at(c_pub);
            const std::string& sid = row.at(c_sci);
            std::string ctx = file_context(authorships_path, row.line);
            auto pit = pub_index.find(pid);
            if (pit == pub_index.end())
                throw ValidationError(ctx + ": authorship references unknown publication \"" + pid + "\"");
            if (!scientist_ids.count(sid))
                throw ValidationError(ctx + ": authorship references unknown scientist \"" + sid + "\"");
            if (!seen.insert({pid, sid}).second)
                throw ValidationError(ctx + ": duplicate authorship (" + pid + ", " + sid + ")");
            corpus.publications[pit->second].corpus_author_ids.push_back(sid);
        }
    }
    for (auto& p : corpus.publications) {
        std::sort(p.corpus_author_ids.begin(), p.corpus_author_ids.end());
        if (static_cast<int>(p.corpus_author_ids.size()) > p.n_authors_total)
            throw ValidationError(publications_path + ": publication \"" + p.id + "\" lists " +
                                  std::to_string(p.corpus_author_ids.size()) +
                                  " corpus authors but n_authors_total is " +
                                  std::to_string(p.n_authors_total));
    }

    corpus.rebuild_indexes();
    return corpus;
}

Corpus load_corpus(const RunConfig& config) {
    return load_corpus(config.scientists_path, config.publications_path, config.authorships_path,
                       config.journals_path, config.sectors_path, config);
}

std::pair<Corpus, FilterReport> apply_window_filter(const Corpus& corpus, const Window& window) {
    if (window.start_year > window.end_year) throw ConfigError("empty observation window");

    FilterReport report;
    report.ingested = static_cast<int>(corpus.scientists.size());

    Corpus out;
    out.journals = corpus.journals;
    out.sectors = corpus.sectors;
    out.areas = corpus.areas;
    out.window = window;
    out.filtered = true;

    std::unordered_set<std::string> retained_ids;
    for (const auto& s : corpus.scientists) {
        const EmploymentRecord* first = s.record_for(window.start_year);
        const EmploymentRecord* last = s.record_for(window.end_year);
        if (!first) {
            ++report.removed_late_hire;
            continue;
        }
        if (!last) {
            ++report.removed_early_exit;
            continue;
        }
        bool gap = false;
        bool sector_change = false;
        for (int year = window.start_year; year <= window.end_year && !gap; ++year) {
            const EmploymentRecord* rec = s.record_for(year);
            if (!rec) gap = true;
            else if (rec->sector_code != first->sector_code) sector_change = true;
        }
        if (gap) {
            ++report.removed_gap_year;
            continue;
        }
        if (sector_change) {
            ++report.removed_sector_change;
            continue;
        }

        Scientist kept = s;
        kept.sector_code = first->sector_code;
        kept.attributed_role = last->role;
        if (first->role != last->role) ++report.role_reattributions;
        retained_ids.insert(kept.id);
        out.scientists.push_back(std::move(kept));
    }
    report.retained = static_cast<int>(out.scientists.size());

    for (const auto& p : corpus.publications) {
        Publication kept = p;
        kept.corpus_author_ids.clear();
        for (const auto& sid : p.corpus_author_ids)
            if (retained_ids.count(sid)) kept.corpus_author_ids.push_back(sid);
        if (kept.corpus_author_ids.empty()) {
            ++report.publications_dropped;
            continue;
        }
        out.publications.push_back(std::move(kept));
    }

    out.rebuild_indexes();
    return {std::move(out), report};
}

bool active_flag(const Corpus& corpus, const Window& window, const std::string& scientist_id) {
    auto it = corpus.scientist_index.find(scientist_id);
    if (it == corpus.scientist_index.end())
        throw ValidationError("unknown scientist id \"" + scientist_id + "\"");
    for (std::size_t p : corpus.publications_by_scientist[it->second])
        if (window.contains(corpus.publications[p].year)) return true;
    return false;
}

} // namespace scientoscope
