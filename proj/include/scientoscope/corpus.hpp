#pragma once

#include "scientoscope/config.hpp"
#include "scientoscope/types.hpp"

#include <string>
#include <utility>

namespace scientoscope {

// Loads and validates the five-CSV corpus. All references must resolve,
// ids must be unique; malformed rows are reported with file and line.
Corpus load_corpus(const std::string& scientists_path, const std::string& publications_path,
                   const std::string& authorships_path, const std::string& journals_path,
                   const std::string& sectors_path, const RunConfig& config);

Corpus load_corpus(const RunConfig& config);

// Dataset-construction filter. Retains scientists holding a staff role in
// every window year with an unchanged sector, attributes the final-year
// role, and drops publications left without any retained corpus author.
// Removal precedence when several rules apply: late hire, early exit,
// gap year, sector change.
std::pair<Corpus, FilterReport> apply_window_filter(const Corpus& corpus, const Window& window);

// True iff the scientist authored at least one publication inside the window.
bool active_flag(const Corpus& corpus, const Window& window, const std::string& scientist_id);

} // namespace scientoscope
