// Procedural benchmark used by the acceptance suite and the synth-benchmark
// CLI subcommand. Drawing is seeded through std::mt19937 with explicit
// mappings only, so the generated corpus is identical across platforms.

#include "sketcheval/synthbench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <random>
#include <vector>

#include <json.hpp>

#include "sketcheval/errors.hpp"
#include "sketcheval/image.hpp"

namespace sketcheval {

namespace {

constexpr int kEdgePixels = 256;
constexpr int kSketchCount = 6;
constexpr int kRendersPerSketch = 10;
constexpr int kRealCount = 50;

struct Rng {
    std::mt19937 gen;
    explicit Rng(std::uint32_t seed) : gen(seed) {}
    double unit() { return gen() * (1.0 / 4294967296.0); }
    int range(int lo, int hi) {
        return lo + static_cast<int>(gen() % static_cast<std::uint32_t>(hi - lo + 1));
    }
    double normal(double sigma) {
        double u1 = std::max(unit(), 1e-12), u2 = unit();
        return sigma * std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }
};

void fill_rect(GrayImage& img, int x0, int y0, int x1, int y1, double v) {
    x0 = std::clamp(x0, 0, img.width - 1);
    x1 = std::clamp(x1, 0, img.width - 1);
    y0 = std::clamp(y0, 0, img.height - 1);
    y1 = std::clamp(y1, 0, img.height - 1);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) img.at(x, y) = v;
}

void hline(GrayImage& img, int x0, int x1, int y, double v, int thickness = 2) {
    fill_rect(img, x0, y, x1, y + thickness - 1, v);
}

void vline(GrayImage& img, int x, int y0, int y1, double v, int thickness = 2) {
    fill_rect(img, x, y0, x + thickness - 1, y1, v);
}

void rect_border(GrayImage& img, int x0, int y0, int x1, int y1, double v) {
    hline(img, x0, x1, y0, v);
    hline(img, x0, x1, y1, v);
    vline(img, x0, y0, y1, v);
    vline(img, x1, y0, y1, v);
}

void slanted_line(GrayImage& img, int x0, int y0, int x1, int y1, double v) {
    int steps = std::max(std::abs(x1 - x0), std::abs(y1 - y0));
    for (int s = 0; s <= steps; ++s) {
        int x = x0 + (x1 - x0) * s / std::max(steps, 1);
        int y = y0 + (y1 - y0) * s / std::max(steps, 1);
        fill_rect(img, x, y, x + 1, y + 1, v);
    }
}

GrayImage draw_sketch(Rng& rng) {
    GrayImage img = make_image(kEdgePixels, kEdgePixels, 1.0);
    const double ink = 0.0;

    int x0 = rng.range(30, 55), x1 = rng.range(185, 220);
    int y0 = rng.range(70, 110), y1 = rng.range(205, 230);
    rect_border(img, x0, y0, x1, y1, ink);

    // roof line
    int apex_x = (x0 + x1) / 2 + rng.range(-25, 25);
    int apex_y = y0 - rng.range(20, 45);
    slanted_line(img, x0, y0, apex_x, apex_y, ink);
    slanted_line(img, apex_x, apex_y, x1, y0, ink);

    // window grid
    int rows = rng.range(2, 4), cols = rng.range(3, 5);
    int cell_w = (x1 - x0) / (cols + 1), cell_h = (y1 - y0) / (rows + 1);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int wx = x0 + cell_w / 2 + c * cell_w + cell_w / 4;
            int wy = y0 + cell_h / 2 + r * cell_h + cell_h / 4;
            rect_border(img, wx, wy, wx + cell_w / 2, wy + cell_h / 2, ink);
        }

    // door and a couple of intent strokes
    int door_x = rng.range(x0 + 10, x1 - 20);
    rect_border(img, door_x, y1 - 30, door_x + 14, y1, ink);
    for (int s = 0; s < 2; ++s) {
        int sx = rng.range(10, kEdgePixels - 50);
        int sy = rng.range(10, kEdgePixels - 50);
        if (rng.unit() < 0.5)
            hline(img, sx, sx + rng.range(20, 40), sy, ink);
        else
            vline(img, sx, sy, sy + rng.range(20, 40), ink);
    }
    return img;
}

GrayImage draw_real(Rng& rng) {
    GrayImage img = make_image(kEdgePixels, kEdgePixels);
    double sky_top = 0.75 + 0.15 * rng.unit();
    for (int y = 0; y < kEdgePixels; ++y) {
        double v = sky_top - 0.35 * y / kEdgePixels;
        for (int x = 0; x < kEdgePixels; ++x) img.at(x, y) = v;
    }
    int buildings = rng.range(1, 3);
    for (int b = 0; b < buildings; ++b) {
        int bx0 = rng.range(10, 150), bw = rng.range(50, 100);
        int by0 = rng.range(60, 140);
        double fill = 0.25 + 0.3 * rng.unit();
        fill_rect(img, bx0, by0, bx0 + bw, kEdgePixels - rng.range(5, 25), fill);
        int wrows = rng.range(3, 6), wcols = rng.range(2, 5);
        for (int r = 0; r < wrows; ++r)
            for (int c = 0; c < wcols; ++c) {
                int wx = bx0 + 8 + c * (bw - 12) / wcols;
                int wy = by0 + 10 + r * (kEdgePixels - by0 - 30) / wrows;
                fill_rect(img, wx, wy, wx + 6, wy + 8, fill * 0.4);
            }
    }
    for (double& v : img.data) v = std::clamp(v + rng.normal(0.02), 0.0, 1.0);
    return img;
}

GrayImage draw_unrelated(Rng& rng) {
    GrayImage img = make_image(kEdgePixels, kEdgePixels);
    int cell = rng.range(5, 9);
    double lo = 0.15 + 0.1 * rng.unit(), hi = 0.75 + 0.15 * rng.unit();
    for (int y = 0; y < kEdgePixels; ++y)
        for (int x = 0; x < kEdgePixels; ++x)
            img.at(x, y) = ((x / cell + y / cell) % 2 == 0) ? lo : hi;
    int patches = rng.range(6, 10);
    for (int p = 0; p < patches; ++p) {
        int px = rng.range(0, kEdgePixels - 40), py = rng.range(0, kEdgePixels - 40);
        fill_rect(img, px, py, px + rng.range(15, 40), py + rng.range(15, 40),
                  0.2 + 0.6 * rng.unit());
    }
    for (double& v : img.data) v = std::clamp(v + rng.normal(0.03), 0.0, 1.0);
    return img;
}

GrayImage noisy_copy(const GrayImage& sketch, Rng& rng) {
    // constant-magnitude jitter so per-render distances stay clustered
    static const int kJitter[4] = {-3, -2, 2, 3};
    int dx = kJitter[rng.range(0, 3)], dy = kJitter[rng.range(0, 3)];
    GrayImage img = make_image(sketch.width, sketch.height, 1.0);
    for (int y = 0; y < sketch.height; ++y)
        for (int x = 0; x < sketch.width; ++x) {
            int sx = x - dx, sy = y - dy;
            if (sx >= 0 && sy >= 0 && sx < sketch.width && sy < sketch.height)
                img.at(x, y) = sketch.at(sx, sy);
        }
    for (int s = 0; s < 2; ++s) {
        int sx = rng.range(15, kEdgePixels - 60);
        int sy = rng.range(15, kEdgePixels - 60);
        if (rng.unit() < 0.5)
            hline(img, sx, sx + 30, sy, 0.0);
        else
            vline(img, sx, sy, sy + 30, 0.0);
    }
    for (double& v : img.data) v = std::clamp(v + rng.normal(0.04), 0.0, 1.0);
    return img;
}

}  // namespace

std::filesystem::path generate_synth_benchmark(const std::filesystem::path& dir,
                                               unsigned seed) {
    namespace fs = std::filesystem;
    fs::create_directories(dir / "real");
    fs::create_directories(dir / "sketches");
    for (const char* method : {"identity", "noisy-copy", "shuffled-unrelated"})
        fs::create_directories(dir / "renders" / method);

    nlohmann::ordered_json manifest;
    auto& real_list = manifest["real_images"] = nlohmann::ordered_json::array();
    for (int i = 0; i < kRealCount; ++i) {
        Rng rng(static_cast<std::uint32_t>(seed + 101 * i + 7));
        char name[64];
        std::snprintf(name, sizeof name, "real/real_%03d.png", i);
        save_png(draw_real(rng), dir / name);
        real_list.push_back(name);
    }

    std::vector<GrayImage> sketches;
    auto& sketch_list = manifest["sketches"] = nlohmann::ordered_json::array();
    for (int i = 0; i < kSketchCount; ++i) {
        Rng rng(static_cast<std::uint32_t>(seed + 1009 * i + 13));
        char id[16], name[64];
        std::snprintf(id, sizeof id, "s%02d", i);
        std::snprintf(name, sizeof name, "sketches/%s.png", id);
        GrayImage img = draw_sketch(rng);
        save_png(img, dir / name);
        sketches.push_back(std::move(img));
        sketch_list.push_back({{"id", id}, {"image", name}});
    }

    auto& methods = manifest["methods"] = nlohmann::ordered_json::array();
    for (const std::string method : {"identity", "noisy-copy", "shuffled-unrelated"}) {
        nlohmann::ordered_json entry;
        entry["name"] = method;
        auto& groups = entry["render_groups"] = nlohmann::ordered_json::array();
        for (int si = 0; si < kSketchCount; ++si) {
            nlohmann::ordered_json group;
            char id[16];
            std::snprintf(id, sizeof id, "s%02d", si);
            group["sketch_id"] = id;
            auto& images = group["images"] = nlohmann::ordered_json::array();
            for (int r = 0; r < kRendersPerSketch; ++r) {
                Rng rng(static_cast<std::uint32_t>(seed + 7919 * si + 104729 * r +
                                                   (method == "identity"     ? 1
                                                    : method == "noisy-copy" ? 2
                                                                             : 3)));
                char name[96];
                std::snprintf(name, sizeof name, "renders/%s/%s_r%d.png", method.c_str(),
                              id, r);
                GrayImage img;
                if (method == "identity")
                    img = sketches[si];
                else if (method == "noisy-copy")
                    img = noisy_copy(sketches[si], rng);
                else
                    img = draw_unrelated(rng);
                save_png(img, dir / name);
                images.push_back(name);
            }
            groups.push_back(std::move(group));
        }
        methods.push_back(std::move(entry));
    }

    fs::path manifest_path = dir / "manifest.json";
    std::ofstream out(manifest_path);
    if (!out) throw input_error("cannot write manifest: " + manifest_path.string());
    out << manifest.dump(2) << "\n";
    return manifest_path;
}

}  // namespace sketcheval
