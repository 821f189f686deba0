// Flat key-value configuration files: one "key = value" per line, '#'
// comments, blank lines ignored. Values are parsed on demand with typed
// getters; the full resolved map can be echoed back for provenance.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rhi {

class Config {
public:
    Config() = default;

    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    void set(const std::string& key, const std::string& value);
    // Applies "key=value" override strings (CLI flags win over file values).
    void apply_override(const std::string& assignment);

    bool has(const std::string& key) const;

    std::string get_str(const std::string& key) const;
    std::string get_str(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long get_int(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    // Keys in insertion order, for deterministic echo.
    std::vector<std::pair<std::string, std::string>> items() const;
    std::string to_string() const;

private:
    std::map<std::string, std::string> values_;
    std::vector<std::string> order_;
};

}  // namespace rhi
