// Canny edge extraction and Hough line detection for sketch synthesis.
//
// Non-maximum suppression quantizes the gradient direction into four bins
// using sign-canonicalized (gx, gy) comparisons, never atan2, so photometric
// inversion of the input cannot flip a bin. The tie rule (strictly greater
// toward the positive offset, greater-or-equal toward the negative one)
// keeps exactly one pixel of a two-pixel magnitude plateau.

#include "sketcheval/edges.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "sketcheval/errors.hpp"

namespace sketcheval {

namespace {

inline int clamp_index(int v, int hi) { return std::clamp(v, 0, hi); }

enum Direction { dir_h = 0, dir_d45 = 1, dir_v = 2, dir_d135 = 3 };

Direction quantize_direction(double gx, double gy) {
    // canonicalize to gy >= 0 (and gx >= 0 when gy == 0)
    if (gy < 0.0 || (gy == 0.0 && gx < 0.0)) {
        gx = -gx;
        gy = -gy;
    }
    static const double t1 = std::sqrt(2.0) - 1.0;  // tan 22.5 deg
    static const double t2 = std::sqrt(2.0) + 1.0;  // tan 67.5 deg
    double ax = std::abs(gx);
    if (gy < t1 * ax) return dir_h;
    if (gy <= t2 * ax) return gx >= 0.0 ? dir_d45 : dir_d135;
    return dir_v;
}

constexpr int kOffsetX[4] = {1, 1, 0, -1};
constexpr int kOffsetY[4] = {0, 1, 1, 1};

}  // namespace

GradientField sobel_gradients(const GrayImage& img) {
    if (img.width < 3 || img.height < 3)
        throw argument_error("sobel_gradients: image must be at least 3x3");

    const int w = img.width, h = img.height;
    GradientField g;
    g.width = w;
    g.height = h;
    g.gx.assign(static_cast<std::size_t>(w) * h, 0.0);
    g.gy.assign(static_cast<std::size_t>(w) * h, 0.0);

    for (int y = 0; y < h; ++y) {
        int ym = clamp_index(y - 1, h - 1), yp = clamp_index(y + 1, h - 1);
        for (int x = 0; x < w; ++x) {
            int xm = clamp_index(x - 1, w - 1), xp = clamp_index(x + 1, w - 1);
            double nw = img.at(xm, ym), n = img.at(x, ym), ne = img.at(xp, ym);
            double wv = img.at(xm, y), ev = img.at(xp, y);
            double sw = img.at(xm, yp), s = img.at(x, yp), se = img.at(xp, yp);
            std::size_t i = static_cast<std::size_t>(y) * w + x;
            g.gx[i] = (ne + 2.0 * ev + se) - (nw + 2.0 * wv + sw);
            g.gy[i] = (sw + 2.0 * s + se) - (nw + 2.0 * n + ne);
        }
    }
    return g;
}

EdgeMap canny(const GrayImage& img, double sigma, double low, double high) {
    if (!(sigma > 0.0)) throw argument_error("canny: sigma must be positive");
    if (!(low > 0.0) || !(low < high) || !(high <= 1.0))
        throw argument_error("canny: thresholds must satisfy 0 < low < high <= 1");

    GrayImage smoothed = gaussian_blur(img, sigma);
    GradientField g = sobel_gradients(smoothed);

    const int w = img.width, h = img.height;
    const std::size_t count = static_cast<std::size_t>(w) * h;
    std::vector<double> mag(count);
    double max_mag = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        mag[i] = std::hypot(g.gx[i], g.gy[i]);
        max_mag = std::max(max_mag, mag[i]);
    }

    EdgeMap out;
    out.width = w;
    out.height = h;
    out.data.assign(count, 0);
    if (max_mag <= 0.0) return out;

    for (std::size_t i = 0; i < count; ++i) mag[i] /= max_mag;

    // non-maximum suppression; image border is never an edge
    std::vector<double> thin(count, 0.0);
    for (int y = 1; y < h - 1; ++y) {
        for (int x = 1; x < w - 1; ++x) {
            std::size_t i = static_cast<std::size_t>(y) * w + x;
            if (mag[i] < low) continue;
            Direction d = quantize_direction(g.gx[i], g.gy[i]);
            double plus = mag[static_cast<std::size_t>(y + kOffsetY[d]) * w + (x + kOffsetX[d])];
            double minus = mag[static_cast<std::size_t>(y - kOffsetY[d]) * w + (x - kOffsetX[d])];
            if (mag[i] > plus && mag[i] >= minus) thin[i] = mag[i];
        }
    }

    // hysteresis: strong pixels seed a BFS over 8-connected weak pixels
    std::deque<std::pair<int, int>> queue;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            std::size_t i = static_cast<std::size_t>(y) * w + x;
            if (thin[i] >= high) {
                out.data[i] = 1;
                queue.emplace_back(x, y);
            }
        }
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                int nx = x + dx, ny = y + dy;
                if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                std::size_t j = static_cast<std::size_t>(ny) * w + nx;
                if (!out.data[j] && thin[j] >= low) {
                    out.data[j] = 1;
                    queue.emplace_back(nx, ny);
                }
            }
    }
    return out;
}

EdgeMap canny(const GrayImage& img, const CannyParams& p) {
    return canny(img, p.sigma, p.low, p.high);
}

std::vector<HoughLine> hough_lines(const EdgeMap& edges, int theta_steps,
                                   double rho_resolution, int min_votes) {
    if (theta_steps < 2) throw argument_error("hough_lines: theta_steps must be >= 2");
    if (!(rho_resolution > 0.0))
        throw argument_error("hough_lines: rho_resolution must be positive");
    if (min_votes < 1) throw argument_error("hough_lines: min_votes must be >= 1");

    std::vector<std::pair<int, int>> points;
    for (int y = 0; y < edges.height; ++y)
        for (int x = 0; x < edges.width; ++x)
            if (edges.at(x, y)) points.emplace_back(x, y);
    if (points.empty()) return {};

    const double max_rho = std::hypot(edges.width - 1.0, edges.height - 1.0);
    const int n_rho = static_cast<int>(std::lround(2.0 * max_rho / rho_resolution)) + 1;
    std::vector<int> acc(static_cast<std::size_t>(theta_steps) * n_rho, 0);

    std::vector<double> cos_t(theta_steps), sin_t(theta_steps);
    for (int k = 0; k < theta_steps; ++k) {
        double theta = std::numbers::pi * k / theta_steps;
        cos_t[k] = std::cos(theta);
        sin_t[k] = std::sin(theta);
    }
    for (auto [x, y] : points)
        for (int k = 0; k < theta_steps; ++k) {
            double rho = x * cos_t[k] + y * sin_t[k];
            int bin = static_cast<int>(std::lround((rho + max_rho) / rho_resolution));
            bin = std::clamp(bin, 0, n_rho - 1);
            ++acc[static_cast<std::size_t>(k) * n_rho + bin];
        }

    std::vector<HoughLine> lines;
    for (int k = 0; k < theta_steps; ++k)
        for (int b = 0; b < n_rho; ++b) {
            int votes = acc[static_cast<std::size_t>(k) * n_rho + b];
            if (votes < min_votes) continue;
            bool is_max = true;
            for (int dk = -1; dk <= 1 && is_max; ++dk)
                for (int db = -1; db <= 1; ++db) {
                    if (dk == 0 && db == 0) continue;
                    int nk = k + dk, nb = b + db;
                    if (nk < 0 || nb < 0 || nk >= theta_steps || nb >= n_rho) continue;
                    if (acc[static_cast<std::size_t>(nk) * n_rho + nb] > votes) {
                        is_max = false;
                        break;
                    }
                }
            if (is_max)
                lines.push_back({b * rho_resolution - max_rho,
                                 std::numbers::pi * k / theta_steps, votes});
        }

    std::sort(lines.begin(), lines.end(), [](const HoughLine& a, const HoughLine& b) {
        if (a.votes != b.votes) return a.votes > b.votes;
        if (a.theta != b.theta) return a.theta < b.theta;
        return a.rho < b.rho;
    });
    return lines;
}

std::vector<HoughLine> hough_lines(const EdgeMap& edges, const HoughParams& p) {
    return hough_lines(edges, p.theta_steps, p.rho_resolution, p.min_votes);
}

namespace {

bool has_edge_support(const EdgeMap& edges, int x, int y) {
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
            int nx = x + dx, ny = y + dy;
            if (nx < 0 || ny < 0 || nx >= edges.width || ny >= edges.height) continue;
            if (edges.at(nx, ny)) return true;
        }
    return false;
}

void rasterize_line(const HoughLine& line, const EdgeMap& support, GrayImage& canvas) {
    const double c = std::cos(line.theta), s = std::sin(line.theta);
    if (std::abs(s) >= std::abs(c)) {
        for (int x = 0; x < canvas.width; ++x) {
            double yf = (line.rho - x * c) / s;
            int y = static_cast<int>(std::lround(yf));
            if (y < 0 || y >= canvas.height) continue;
            if (has_edge_support(support, x, y)) canvas.at(x, y) = 0.0;
        }
    } else {
        for (int y = 0; y < canvas.height; ++y) {
            double xf = (line.rho - y * s) / c;
            int x = static_cast<int>(std::lround(xf));
            if (x < 0 || x >= canvas.width) continue;
            if (has_edge_support(support, x, y)) canvas.at(x, y) = 0.0;
        }
    }
}

}  // namespace

GrayImage synthesize_sketch(const GrayImage& img, const SketchParams& p) {
    EdgeMap edges = canny(img, p.canny);
    GrayImage sketch = make_image(img.width, img.height, 1.0);
    if (p.mode == SketchMode::canny) {
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                if (edges.at(x, y)) sketch.at(x, y) = 0.0;
        return sketch;
    }
    for (const HoughLine& line : hough_lines(edges, p.hough))
        rasterize_line(line, edges, sketch);
    return sketch;
}

}  // namespace sketcheval
