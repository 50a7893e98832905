#pragma once

#include <stdexcept>
#include <string>

namespace scientoscope {

// Base class for everything this library throws on bad input or bad state.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files, dangling references, duplicate ids.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Bad configuration or bad operation arguments.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

inline std::string file_context(const std::string& path, std::size_t line) {
    return path + ":" + std::to_string(line);
}

inline std::string file_context(const std::string& path, std::size_t line, std::size_t column) {
    return path + ":" + std::to_string(line) + ":" + std::to_string(column);
}

} // namespace scientoscope
