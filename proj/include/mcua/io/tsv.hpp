#pragma once

#include <string>
#include <vector>

namespace mcua {

struct TsvFile {
    std::vector<std::vector<std::string>> rows;
    std::string version;  // first "# <name> v..." comment, verbatim
};

/// Reads a tab-separated table file. Lines starting with '#' are comments;
/// the first comment is kept as the file's version banner.
TsvFile read_tsv(const std::string& path);

}  // namespace mcua
