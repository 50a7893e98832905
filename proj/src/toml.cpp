#include "scientoscope/toml.hpp"
#include "scientoscope/error.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace scientoscope::toml {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// Strips a trailing comment that is not inside a basic string.
std::string strip_comment(const std::string& s) {
    bool in_string = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '"' && (i == 0 || s[i - 1] != '\\')) in_string = !in_string;
        if (c == '#' && !in_string) return s.substr(0, i);
    }
    return s;
}

std::string parse_basic_string(const std::string& tok, const std::string& ctx) {
    if (tok.size() < 2 || tok.front() != '"' || tok.back() != '"')
        throw ConfigError(ctx + ": malformed string value: " + tok);
    std::string out;
    for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
        char c = tok[i];
        if (c == '\\' && i + 2 < tok.size() + 1) {
            char e = tok[++i];
            switch (e) {
            case 'n': out.push_back('\n'); break;
            case 't': out.push_back('\t'); break;
            case 'r': out.push_back('\r'); break;
            case '"': out.push_back('"'); break;
            case '\\': out.push_back('\\'); break;
            default: throw ConfigError(ctx + ": unsupported escape \\" + std::string(1, e));
            }
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::string> split_array(const std::string& body, const std::string& ctx) {
    std::vector<std::string> items;
    std::string cur;
    bool in_string = false;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '"' && (i == 0 || body[i - 1] != '\\')) in_string = !in_string;
        if (c == ',' && !in_string) {
            std::string item = trim(cur);
            if (!item.empty()) items.push_back(item);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (in_string) throw ConfigError(ctx + ": unterminated string in array");
    std::string item = trim(cur);
    if (!item.empty()) items.push_back(item);
    return items;
}

std::string decode_token(const std::string& tok, const std::string& ctx) {
    if (!tok.empty() && tok.front() == '"') return parse_basic_string(tok, ctx);
    return tok;
}

} // namespace

void Document::set(const std::string& key, std::vector<std::string> tokens, bool is_array) {
    values_[key] = std::move(tokens);
    is_array_[key] = is_array;
}

const std::vector<std::string>* Document::find(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
}

std::string Document::get_string(const std::string& key, const std::string& fallback) const {
    const auto* v = find(key);
    return v && !v->empty() ? (*v)[0] : fallback;
}

std::int64_t Document::get_int(const std::string& key, std::int64_t fallback) const {
    const auto* v = find(key);
    if (!v || v->empty()) return fallback;
    try {
        return std::stoll((*v)[0]);
    } catch (const std::exception&) {
        throw ConfigError("config key \"" + key + "\": expected integer, got \"" + (*v)[0] + "\"");
    }
}

double Document::get_double(const std::string& key, double fallback) const {
    const auto* v = find(key);
    if (!v || v->empty()) return fallback;
    try {
        return std::stod((*v)[0]);
    } catch (const std::exception&) {
        throw ConfigError("config key \"" + key + "\": expected number, got \"" + (*v)[0] + "\"");
    }
}

bool Document::get_bool(const std::string& key, bool fallback) const {
    const auto* v = find(key);
    if (!v || v->empty()) return fallback;
    const std::string& s = (*v)[0];
    if (s == "true") return true;
    if (s == "false") return false;
    throw ConfigError("config key \"" + key + "\": expected true/false, got \"" + s + "\"");
}

std::vector<std::string> Document::get_string_array(const std::string& key) const {
    const auto* v = find(key);
    if (!v) return {};
    return *v;
}

std::string Document::require_string(const std::string& key) const {
    if (!has(key)) throw ConfigError("config: missing required key \"" + key + "\"");
    return get_string(key, "");
}

std::int64_t Document::require_int(const std::string& key) const {
    if (!has(key)) throw ConfigError("config: missing required key \"" + key + "\"");
    return get_int(key, 0);
}

Document parse(const std::string& text, const std::string& path_for_errors) {
    Document doc;
    std::istringstream in(text);
    std::string raw_line;
    std::string section;
    std::size_t lineno = 0;
    while (std::getline(in, raw_line)) {
        ++lineno;
        std::string ctx = file_context(path_for_errors, lineno);
        std::string line = trim(strip_comment(raw_line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(ctx + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) throw ConfigError(ctx + ": empty section name");
            continue;
        }
        std::size_t eq = std::string::npos;
        bool in_string = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_string = !in_string;
            if (line[i] == '=' && !in_string) { eq = i; break; }
        }
        if (eq == std::string::npos) throw ConfigError(ctx + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(ctx + ": empty key");
        if (value.empty()) throw ConfigError(ctx + ": empty value for key \"" + key + "\"");
        std::string full_key = section.empty() ? key : section + "." + key;
        if (value.front() == '[') {
            if (value.back() != ']') throw ConfigError(ctx + ": arrays must be single-line");
            auto raw_items = split_array(value.substr(1, value.size() - 2), ctx);
            std::vector<std::string> items;
            items.reserve(raw_items.size());
            for (const auto& item : raw_items) items.push_back(decode_token(item, ctx));
            doc.set(full_key, std::move(items), true);
        } else {
            doc.set(full_key, {decode_token(value, ctx)}, false);
        }
    }
    return doc;
}

Document read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

} // namespace scientoscope::toml
