#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sketcheval {

// A file referenced by the manifest. `id` is the identifier feature and
// embedding CSVs must use: the sketch id for sketches, the path exactly as
// written in the manifest for renders and real images. `path` is resolved
// against the manifest directory.
struct FileRef {
    std::string id;
    std::filesystem::path path;
};

struct RenderGroup {
    std::string sketch_id;
    std::vector<FileRef> images;
};

struct MethodEntry {
    std::string name;
    std::vector<RenderGroup> render_groups;
    std::optional<std::filesystem::path> embeddings_file;
    std::optional<std::filesystem::path> features_file;
};

struct Manifest {
    std::vector<FileRef> real_images;
    std::vector<FileRef> sketches;  // id = the sketch's declared id
    std::vector<MethodEntry> methods;
    std::optional<std::filesystem::path> real_features_file;
    std::filesystem::path base_dir;
};

// Loads and validates a manifest JSON file. Schema violations report a JSON
// pointer; a render group naming an unknown sketch id is a reference error;
// missing referenced files are collected into one input error.
Manifest load_manifest(const std::filesystem::path& path);

}  // namespace sketcheval
