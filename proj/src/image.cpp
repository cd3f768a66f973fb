#include "sketcheval/image.hpp"

#include <algorithm>
#include <cmath>

#include "sketcheval/errors.hpp"

namespace sketcheval {

GrayImage make_image(int width, int height, double fill) {
    if (width < 1 || height < 1)
        throw argument_error("image dimensions must be at least 1x1");
    GrayImage img;
    img.width = width;
    img.height = height;
    img.data.assign(static_cast<std::size_t>(width) * height, fill);
    return img;
}

namespace {

inline int clamp_index(int v, int hi) {
    return std::clamp(v, 0, hi);
}

}  // namespace

GrayImage resize_bilinear(const GrayImage& img, int out_w, int out_h) {
    if (out_w < 1 || out_h < 1)
        throw argument_error("resize target must be at least 1x1");
    if (img.width < 1 || img.height < 1)
        throw argument_error("cannot resize an empty image");

    GrayImage out = make_image(out_w, out_h);
    const double sx = static_cast<double>(img.width) / out_w;
    const double sy = static_cast<double>(img.height) / out_h;

    // Half-pixel centers; source size == target size maps every output pixel
    // onto an input pixel with zero fraction, reproducing the input bitwise.
    std::vector<int> x0(out_w), x1(out_w);
    std::vector<double> fx(out_w);
    for (int x = 0; x < out_w; ++x) {
        double src = (x + 0.5) * sx - 0.5;
        double fl = std::floor(src);
        int i = static_cast<int>(fl);
        fx[x] = src - fl;
        x0[x] = clamp_index(i, img.width - 1);
        x1[x] = clamp_index(i + 1, img.width - 1);
    }
    for (int y = 0; y < out_h; ++y) {
        double src = (y + 0.5) * sy - 0.5;
        double fl = std::floor(src);
        int j = static_cast<int>(fl);
        double fy = src - fl;
        int y0 = clamp_index(j, img.height - 1);
        int y1 = clamp_index(j + 1, img.height - 1);
        for (int x = 0; x < out_w; ++x) {
            double top = (1.0 - fx[x]) * img.at(x0[x], y0) + fx[x] * img.at(x1[x], y0);
            double bot = (1.0 - fx[x]) * img.at(x0[x], y1) + fx[x] * img.at(x1[x], y1);
            out.at(x, y) = (1.0 - fy) * top + fy * bot;
        }
    }
    return out;
}

GrayImage gaussian_blur(const GrayImage& img, double sigma) {
    if (!(sigma > 0.0))
        throw argument_error("gaussian_blur: sigma must be positive");

    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        kernel[i + radius] = w;
        sum += w;
    }
    for (double& w : kernel) w /= sum;

    const int w = img.width, h = img.height;
    GrayImage tmp = make_image(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k)
                acc += kernel[k + radius] * img.at(clamp_index(x + k, w - 1), y);
            tmp.at(x, y) = acc;
        }
    }
    GrayImage out = make_image(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k)
                acc += kernel[k + radius] * tmp.at(x, clamp_index(y + k, h - 1));
            out.at(x, y) = std::clamp(acc, 0.0, 1.0);
        }
    }
    return out;
}

}  // namespace sketcheval
