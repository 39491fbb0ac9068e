#include "mcua/io/tsv.hpp"

#include <fstream>

#include "mcua/error.hpp"

namespace mcua {

TsvFile read_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open table file: " + path);
    TsvFile out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (out.version.empty() && out.rows.empty())
                out.version = line.substr(1).find_first_not_of(' ') != std::string::npos
                                  ? line.substr(line.find_first_not_of("# "))
                                  : "";
            continue;
        }
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            const size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        out.rows.push_back(std::move(fields));
    }
    return out;
}

}  // namespace mcua
