#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sketcheval/fid.hpp"

namespace sketcheval {

// Parsed feature/embedding CSV: header `id,f0,f1,...,f{d-1}`, one row per
// image, ids matching the manifest identifiers. Shared by the FID feature
// path and the content embedding path.
struct FeatureTable {
    std::vector<std::string> ids;
    FeatureMatrix matrix;  // source = external_file

    // Index of id, or -1.
    long find(const std::string& id) const;
};

FeatureTable load_feature_csv(const std::filesystem::path& path);

// Minimal CSV splitting used by the loaders; no quoting rules, cells are
// trimmed of surrounding whitespace.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace sketcheval
