#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sketcheval/image.hpp"

namespace sketcheval {

// Binary edge raster, row-major, values are exactly 0 or 1.
struct EdgeMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
};

// Line in normal form: rho = x cos(theta) + y sin(theta), theta in [0, pi).
struct HoughLine {
    double rho = 0.0;
    double theta = 0.0;
    int votes = 0;
};

struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<double> gx;
    std::vector<double> gy;
};

struct CannyParams {
    double sigma = 1.4;
    double low = 0.1;   // thresholds apply to max-normalized magnitude
    double high = 0.3;
};

struct HoughParams {
    int theta_steps = 180;
    double rho_resolution = 1.0;
    int min_votes = 30;
};

enum class SketchMode { canny, hough };

struct SketchParams {
    SketchMode mode = SketchMode::canny;
    CannyParams canny;
    HoughParams hough;
};

// 3x3 Sobel with edge-clamped borders. Requires width, height >= 3.
GradientField sobel_gradients(const GrayImage& img);

// blur -> Sobel -> max-normalized magnitude -> 4-direction non-maximum
// suppression -> double-threshold hysteresis (weak pixels kept only when
// 8-connected to a strong pixel).
EdgeMap canny(const GrayImage& img, double sigma, double low, double high);
EdgeMap canny(const GrayImage& img, const CannyParams& p = {});

// Standard (rho, theta) accumulator over the set edge pixels. Returns every
// local-maximum cell with votes >= min_votes, sorted by votes descending,
// then theta, then rho.
std::vector<HoughLine> hough_lines(const EdgeMap& edges, int theta_steps,
                                   double rho_resolution, int min_votes);
std::vector<HoughLine> hough_lines(const EdgeMap& edges, const HoughParams& p = {});

// Black strokes (0) on a white background (1). Canny mode renders the edge
// map directly; Hough mode rasterizes detected lines, keeping only stroke
// pixels within one pixel of edge support. Re-sketching a sketch is not
// idempotent.
GrayImage synthesize_sketch(const GrayImage& img, const SketchParams& p = {});

}  // namespace sketcheval
