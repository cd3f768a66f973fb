#include "sketcheval/content.hpp"

#include <cmath>

#include "sketcheval/errors.hpp"
#include "sketcheval/features.hpp"

namespace sketcheval {

std::vector<double> edge_grid_fractions(const EdgeMap& edges, int grid) {
    if (grid < 1) throw argument_error("edge_grid_fractions: grid must be >= 1");
    if (edges.width < grid || edges.height < grid)
        throw argument_error("edge_grid_fractions: edge map smaller than the grid");

    std::vector<double> fractions(static_cast<std::size_t>(grid) * grid, 0.0);
    for (int gy = 0; gy < grid; ++gy) {
        int y0 = gy * edges.height / grid;
        int y1 = (gy + 1) * edges.height / grid;
        for (int gx = 0; gx < grid; ++gx) {
            int x0 = gx * edges.width / grid;
            int x1 = (gx + 1) * edges.width / grid;
            long set = 0;
            for (int y = y0; y < y1; ++y)
                for (int x = x0; x < x1; ++x)
                    if (edges.at(x, y)) ++set;
            long area = static_cast<long>(x1 - x0) * (y1 - y0);
            fractions[static_cast<std::size_t>(gy) * grid + gx] =
                static_cast<double>(set) / static_cast<double>(area);
        }
    }
    return fractions;
}

ContentEmbedding proxy_content_encoding(const GrayImage& img, std::string id) {
    if (img.width < kProxyGrid || img.height < kProxyGrid)
        throw argument_error("proxy_content_encoding: image must be at least 16x16");
    EdgeMap edges = canny(img, CannyParams{});
    ContentEmbedding emb;
    emb.id = std::move(id);
    emb.values = edge_grid_fractions(edges, kProxyGrid);
    emb.encoder_tag = EncoderTag::proxy_edge;
    return emb;
}

std::vector<ContentEmbedding> load_embeddings(const std::filesystem::path& path) {
    FeatureTable table = load_feature_csv(path);
    std::vector<ContentEmbedding> out;
    out.reserve(table.ids.size());
    for (std::size_t i = 0; i < table.ids.size(); ++i) {
        ContentEmbedding emb;
        emb.id = table.ids[i];
        emb.values.assign(table.matrix.values.begin() + static_cast<long>(i * table.matrix.d),
                          table.matrix.values.begin() +
                              static_cast<long>((i + 1) * table.matrix.d));
        emb.encoder_tag = EncoderTag::external;
        out.push_back(std::move(emb));
    }
    return out;
}

double content_distance(const ContentEmbedding& sketch, const ContentEmbedding& render,
                        bool normalized) {
    if (sketch.encoder_tag != render.encoder_tag)
        throw argument_error(
            "content_distance: embeddings come from different encoder families");
    if (sketch.values.size() != render.values.size())
        throw argument_error("content_distance: dimension mismatch (" +
                             std::to_string(sketch.values.size()) + " vs " +
                             std::to_string(render.values.size()) + ")");
    if (sketch.values.empty())
        throw argument_error("content_distance: empty embeddings");

    double sum = 0.0;
    for (std::size_t i = 0; i < sketch.values.size(); ++i)
        sum += std::abs(sketch.values[i] - render.values[i]);
    return normalized ? sum / static_cast<double>(sketch.values.size()) : sum;
}

}  // namespace sketcheval
