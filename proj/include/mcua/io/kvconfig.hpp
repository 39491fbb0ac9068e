#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mcua {

/// Flat sectioned key-value file:
///
///   # comment
///   [section]
///   key = value
///
/// Values are kept verbatim (trimmed, surrounding quotes removed). Keys
/// before any section header land in the "" section.
class KvConfig {
public:
    static KvConfig load(const std::string& path);
    static KvConfig parse(const std::string& text, const std::string& origin);

    std::optional<std::string> get(const std::string& section,
                                   const std::string& key) const;

    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_or(const std::string& section, const std::string& key,
                  double fallback) const;
    long get_or(const std::string& section, const std::string& key,
                long fallback) const;
    bool get_or(const std::string& section, const std::string& key,
                bool fallback) const;

    bool empty() const { return values_.empty(); }

private:
    std::map<std::pair<std::string, std::string>, std::string> values_;
    std::string origin_;
};

}  // namespace mcua
