#pragma once

#include "scientoscope/types.hpp"

#include <string>
#include <vector>

namespace scientoscope {

enum class MissingIfPolicy { Zero, Impute, Strict };
enum class RankDistMode { Normalized, Raw };
enum class OutputFormat { Csv, Json, Markdown };

MissingIfPolicy missing_if_policy_from_string(const std::string& s);
RankDistMode rankdist_mode_from_string(const std::string& s);
OutputFormat output_format_from_string(const std::string& s);
std::string to_string(MissingIfPolicy p);
std::string to_string(RankDistMode m);
std::string to_string(OutputFormat f);

struct RunConfig {
    Window window;

    std::string scientists_path = "scientists.csv";
    std::string publications_path = "publications.csv";
    std::string authorships_path = "authorships.csv";
    std::string journals_path = "journals.csv";
    std::string sectors_path = "sectors.csv";

    std::string output_dir = "out";
    OutputFormat format = OutputFormat::Csv;
    MissingIfPolicy missing_if_policy = MissingIfPolicy::Zero;
    RankDistMode rankdist_mode = RankDistMode::Normalized;
    std::string cohort_attribute = "cohort";
    std::string reference_cohort; // empty: lexicographically first label
    std::vector<std::string> areas; // empty: derived from sectors.csv, sorted
    int threads = 1;

    std::string config_path; // where this config was loaded from, if any
};

// Reads a TOML config; relative input/output paths resolve against the
// config file's directory.
RunConfig load_config(const std::string& path);

} // namespace scientoscope
