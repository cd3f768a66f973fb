#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace sketcheval {

// Single-channel raster, row-major, luminance values in [0, 1].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t pixel_count() const { return data.size(); }
};

GrayImage make_image(int width, int height, double fill = 0.0);

// Decodes a PNG or JPEG file (sniffed by magic bytes). Color inputs are
// reduced to luminance with BT.601 weights 0.299 R + 0.587 G + 0.114 B on
// channel values scaled to [0, 1]; grayscale inputs pass through scaled.
GrayImage load_image(const std::filesystem::path& path);

// Writes an 8-bit grayscale PNG; values are rounded to the nearest level.
void save_png(const GrayImage& img, const std::filesystem::path& path);

// Bilinear interpolation with half-pixel centers and edge clamping.
// Resizing to the input size reproduces the input bitwise.
GrayImage resize_bilinear(const GrayImage& img, int out_w, int out_h);

// Separable convolution with a normalized 1-D Gaussian kernel of radius
// ceil(3 sigma); borders are handled by edge clamping (replicate).
GrayImage gaussian_blur(const GrayImage& img, double sigma);

}  // namespace sketcheval
