#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sketcheval/edges.hpp"
#include "sketcheval/image.hpp"

namespace sketcheval {

enum class EncoderTag { external, proxy_edge };

struct ContentEmbedding {
    std::string id;
    std::vector<double> values;
    EncoderTag encoder_tag = EncoderTag::proxy_edge;
};

inline constexpr int kProxyGrid = 16;  // 16x16 cells -> 256-dim embedding

// Fraction of set pixels per grid cell, row-major over cells.
std::vector<double> edge_grid_fractions(const EdgeMap& edges, int grid = kProxyGrid);

// Deterministic structural embedding: default Canny, then per-cell edge
// density over a 16x16 grid. Requires the image to be at least 16x16.
ContentEmbedding proxy_content_encoding(const GrayImage& img, std::string id = {});

// Reads the shared CSV embedding format (header `id,f0,...`), one embedding
// per row, tagged external. All rows must share one dimension.
std::vector<ContentEmbedding> load_embeddings(const std::filesystem::path& path);

// Mean absolute component difference (1/d) sum |s_i - r_i|; pass
// normalized = false for the raw L1 sum. Mixing encoder families is an
// error, as is a dimension mismatch.
double content_distance(const ContentEmbedding& sketch, const ContentEmbedding& render,
                        bool normalized = true);

}  // namespace sketcheval
