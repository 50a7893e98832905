#include "scientoscope/config.hpp"
#include "scientoscope/error.hpp"
#include "scientoscope/toml.hpp"

#include <filesystem>

namespace scientoscope {

MissingIfPolicy missing_if_policy_from_string(const std::string& s) {
    if (s == "zero") return MissingIfPolicy::Zero;
    if (s == "impute") return MissingIfPolicy::Impute;
    if (s == "strict") return MissingIfPolicy::Strict;
    throw ConfigError("unknown missing_if_policy \"" + s + "\" (expected zero, impute or strict)");
}

RankDistMode rankdist_mode_from_string(const std::string& s) {
    if (s == "normalized") return RankDistMode::Normalized;
    if (s == "raw") return RankDistMode::Raw;
    throw ConfigError("unknown rankdist_mode \"" + s + "\" (expected normalized or raw)");
}

OutputFormat output_format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    if (s == "markdown") return OutputFormat::Markdown;
    throw ConfigError("unknown output format \"" + s + "\" (expected csv, json or markdown)");
}

std::string to_string(MissingIfPolicy p) {
    switch (p) {
    case MissingIfPolicy::Zero: return "zero";
    case MissingIfPolicy::Impute: return "impute";
    case MissingIfPolicy::Strict: return "strict";
    }
    return "?";
}

std::string to_string(RankDistMode m) {
    return m == RankDistMode::Normalized ? "normalized" : "raw";
}

std::string to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::Markdown: return "markdown";
    }
    return "?";
}

namespace {

std::string resolve(const std::filesystem::path& base, const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute()) return p.string();
    return (base / p).lexically_normal().string();
}

} // namespace

RunConfig load_config(const std::string& path) {
    toml::Document doc = toml::read_file(path);
    RunConfig cfg;
    cfg.config_path = path;
    std::filesystem::path base = std::filesystem::path(path).parent_path();

    cfg.window.start_year = static_cast<int>(doc.get_int("window.start", cfg.window.start_year));
    cfg.window.end_year = static_cast<int>(doc.get_int("window.end", cfg.window.end_year));
    if (cfg.window.start_year > cfg.window.end_year)
        throw ConfigError("window.start must not exceed window.end");

    cfg.scientists_path = resolve(base, doc.get_string("input.scientists", cfg.scientists_path));
    cfg.publications_path = resolve(base, doc.get_string("input.publications", cfg.publications_path));
    cfg.authorships_path = resolve(base, doc.get_string("input.authorships", cfg.authorships_path));
    cfg.journals_path = resolve(base, doc.get_string("input.journals", cfg.journals_path));
    cfg.sectors_path = resolve(base, doc.get_string("input.sectors", cfg.sectors_path));

    cfg.output_dir = resolve(base, doc.get_string("output.directory", cfg.output_dir));
    cfg.format = output_format_from_string(doc.get_string("output.format", "csv"));

    cfg.missing_if_policy =
        missing_if_policy_from_string(doc.get_string("analysis.missing_if_policy", "zero"));
    cfg.rankdist_mode = rankdist_mode_from_string(doc.get_string("analysis.rankdist_mode", "normalized"));
    cfg.cohort_attribute = doc.get_string("analysis.cohort_attribute", "cohort");
    cfg.reference_cohort = doc.get_string("analysis.reference_cohort", "");
    cfg.areas = doc.get_string_array("analysis.areas");
    cfg.threads = static_cast<int>(doc.get_int("analysis.threads", 1));
    if (cfg.threads < 1) throw ConfigError("analysis.threads must be >= 1");

    return cfg;
}

} // namespace scientoscope
