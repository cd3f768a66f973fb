#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oracles {

using sketcheval::EdgeMap;
using sketcheval::GrayImage;

GrayImage ref_resize_bilinear(const GrayImage& img, int out_w, int out_h) {
    GrayImage out = sketcheval::make_image(out_w, out_h);
    auto sample = [&](int x, int y) {
        x = std::clamp(x, 0, img.width - 1);
        y = std::clamp(y, 0, img.height - 1);
        return img.at(x, y);
    };
    for (int y = 0; y < out_h; ++y) {
        for (int x = 0; x < out_w; ++x) {
            double sx = (x + 0.5) * img.width / out_w - 0.5;
            double sy = (y + 0.5) * img.height / out_h - 0.5;
            int ix = static_cast<int>(std::floor(sx));
            int iy = static_cast<int>(std::floor(sy));
            double fx = sx - std::floor(sx);
            double fy = sy - std::floor(sy);
            double v = (1 - fx) * (1 - fy) * sample(ix, iy) +
                       fx * (1 - fy) * sample(ix + 1, iy) +
                       (1 - fx) * fy * sample(ix, iy + 1) +
                       fx * fy * sample(ix + 1, iy + 1);
            out.at(x, y) = v;
        }
    }
    return out;
}

std::vector<double> ref_convolve2d(const GrayImage& img, const std::vector<double>& kernel,
                                   int radius) {
    std::vector<double> out(img.pixel_count(), 0.0);
    const int size = 2 * radius + 1;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int dy = -radius; dy <= radius; ++dy)
                for (int dx = -radius; dx <= radius; ++dx) {
                    int sx = std::clamp(x + dx, 0, img.width - 1);
                    int sy = std::clamp(y + dy, 0, img.height - 1);
                    acc += kernel[static_cast<std::size_t>(dy + radius) * size +
                                  (dx + radius)] *
                           img.at(sx, sy);
                }
            out[static_cast<std::size_t>(y) * img.width + x] = acc;
        }
    return out;
}

std::vector<double> gaussian_kernel_1d(double sigma, int radius) {
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        k[i + radius] = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        sum += k[i + radius];
    }
    for (double& v : k) v /= sum;
    return k;
}

std::vector<double> gaussian_kernel_2d(double sigma, int radius) {
    const int size = 2 * radius + 1;
    std::vector<double> k(static_cast<std::size_t>(size) * size);
    double sum = 0.0;
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx) {
            double v = std::exp(-(static_cast<double>(dx) * dx + static_cast<double>(dy) * dy) /
                                (2.0 * sigma * sigma));
            k[static_cast<std::size_t>(dy + radius) * size + (dx + radius)] = v;
            sum += v;
        }
    for (double& v : k) v /= sum;
    return k;
}

std::vector<double> ref_dct2(const std::vector<double>& pixels, int n) {
    std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            double acc = 0.0;
            for (int y = 0; y < n; ++y)
                for (int x = 0; x < n; ++x)
                    acc += pixels[static_cast<std::size_t>(y) * n + x] *
                           std::cos(std::numbers::pi * (2.0 * y + 1.0) * u / (2.0 * n)) *
                           std::cos(std::numbers::pi * (2.0 * x + 1.0) * v / (2.0 * n));
            double alpha_u = (u == 0) ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
            double alpha_v = (v == 0) ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
            out[static_cast<std::size_t>(u) * n + v] = alpha_u * alpha_v * acc;
        }
    return out;
}

std::vector<std::pair<int, int>> ref_zigzag(int n) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) cells.emplace_back(r, c);
    std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        int sa = a.first + a.second, sb = b.first + b.second;
        if (sa != sb) return sa < sb;
        if (sa % 2 != 0) return a.first < b.first;  // odd diagonals walk down
        return a.first > b.first;                   // even diagonals walk up
    });
    return cells;
}

HoughAccumulator ref_hough_accumulator(const EdgeMap& edges, int theta_steps,
                                       double rho_resolution) {
    HoughAccumulator acc;
    acc.theta_steps = theta_steps;
    acc.rho_resolution = rho_resolution;
    acc.max_rho = std::sqrt(static_cast<double>(edges.width - 1) * (edges.width - 1) +
                            static_cast<double>(edges.height - 1) * (edges.height - 1));
    acc.n_rho = static_cast<int>(std::lround(2.0 * acc.max_rho / rho_resolution)) + 1;
    acc.votes.assign(static_cast<std::size_t>(theta_steps) * acc.n_rho, 0);
    for (int y = 0; y < edges.height; ++y)
        for (int x = 0; x < edges.width; ++x) {
            if (!edges.at(x, y)) continue;
            for (int k = 0; k < theta_steps; ++k) {
                double theta = std::numbers::pi * k / theta_steps;
                double rho = x * std::cos(theta) + y * std::sin(theta);
                int bin = static_cast<int>(std::lround((rho + acc.max_rho) / rho_resolution));
                bin = std::clamp(bin, 0, acc.n_rho - 1);
                ++acc.votes[static_cast<std::size_t>(k) * acc.n_rho + bin];
            }
        }
    return acc;
}

double ref_t_two_tailed_p(double t, double df) {
    const double t0 = std::abs(t);
    const double log_c = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                         0.5 * std::log(df * std::numbers::pi);
    auto density = [&](double u) {
        return std::exp(log_c - (df + 1.0) / 2.0 * std::log1p(u * u / df));
    };
    // substitute u = t0 + s/(1-s): maps [0,1) onto [t0, inf)
    auto integrand = [&](double s) {
        if (s >= 1.0) return 0.0;
        double one_minus = 1.0 - s;
        double u = t0 + s / one_minus;
        return density(u) / (one_minus * one_minus);
    };
    const int intervals = 200000;  // even
    const double h = 1.0 / intervals;
    double sum = integrand(0.0) + integrand(1.0);
    for (int i = 1; i < intervals; ++i)
        sum += integrand(i * h) * ((i % 2 != 0) ? 4.0 : 2.0);
    double tail = sum * h / 3.0;
    return std::min(1.0, 2.0 * tail);
}

double ref_frechet_diagonal(const std::vector<double>& mu1, const std::vector<double>& sd1,
                            const std::vector<double>& mu2,
                            const std::vector<double>& sd2) {
    double total = 0.0;
    for (std::size_t i = 0; i < mu1.size(); ++i) {
        double dm = mu1[i] - mu2[i];
        double ds = sd1[i] - sd2[i];
        total += dm * dm + ds * ds;
    }
    return total;
}

GrayImage random_image(TestRng& rng, int width, int height) {
    GrayImage img = sketcheval::make_image(width, height);
    for (double& v : img.data) v = rng.range(0, 256) / 256.0;
    return img;
}

}  // namespace oracles
