#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace scientoscope::toml {

// Minimal TOML subset: [section] headers, key = value with strings,
// integers, floats, booleans and single-line arrays of those, # comments.
// Keys are flattened to "section.key".
class Document {
public:
    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    double get_double(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<std::string> get_string_array(const std::string& key) const;

    // Throwing variants for required keys.
    std::string require_string(const std::string& key) const;
    std::int64_t require_int(const std::string& key) const;

    void set(const std::string& key, std::vector<std::string> tokens, bool is_array);

    const std::map<std::string, std::vector<std::string>>& raw() const { return values_; }

private:
    const std::vector<std::string>* find(const std::string& key) const;
    // Scalar values are single-token vectors; arrays keep one token per element.
    std::map<std::string, std::vector<std::string>> values_;
    std::map<std::string, bool> is_array_;
};

Document parse(const std::string& text, const std::string& path_for_errors);
Document read_file(const std::string& path);

} // namespace scientoscope::toml
