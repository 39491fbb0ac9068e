#include "mcua/io/kvconfig.hpp"

#include <fstream>
#include <sstream>

#include "mcua/error.hpp"

namespace mcua {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

}  // namespace

KvConfig KvConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

KvConfig KvConfig::parse(const std::string& text, const std::string& origin) {
    KvConfig cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw DataError(origin + ":" + std::to_string(lineno) +
                                ": malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw DataError(origin + ":" + std::to_string(lineno) +
                            ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = unquote(trim(t.substr(eq + 1)));
        if (key.empty())
            throw DataError(origin + ":" + std::to_string(lineno) +
                            ": empty key");
        cfg.values_[{section, key}] = value;
    }
    return cfg;
}

std::optional<std::string> KvConfig::get(const std::string& section,
                                         const std::string& key) const {
    const auto it = values_.find({section, key});
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::string KvConfig::get_or(const std::string& section, const std::string& key,
                             const std::string& fallback) const {
    const auto v = get(section, key);
    return v ? *v : fallback;
}

double KvConfig::get_or(const std::string& section, const std::string& key,
                        double fallback) const {
    const auto v = get(section, key);
    if (!v) return fallback;
    try {
        return std::stod(*v);
    } catch (const std::exception&) {
        throw DataError(origin_ + ": value for " + section + "." + key +
                        " is not a number: " + *v);
    }
}

long KvConfig::get_or(const std::string& section, const std::string& key,
                      long fallback) const {
    const auto v = get(section, key);
    if (!v) return fallback;
    try {
        return std::stol(*v);
    } catch (const std::exception&) {
        throw DataError(origin_ + ": value for " + section + "." + key +
                        " is not an integer: " + *v);
    }
}

bool KvConfig::get_or(const std::string& section, const std::string& key,
                      bool fallback) const {
    const auto v = get(section, key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
    if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
    throw DataError(origin_ + ": value for " + section + "." + key +
                    " is not a boolean: " + *v);
}

}  // namespace mcua
