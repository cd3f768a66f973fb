#include "sketcheval/ssim.hpp"

#include <cmath>
#include <utility>

#include "sketcheval/errors.hpp"
#include "sketcheval/parallel.hpp"

namespace sketcheval {

namespace {

void validate_params(const SsimParams& p) {
    if (p.window_size < 3 || p.window_size % 2 == 0)
        throw argument_error("ssim: window_size must be odd and >= 3");
    if (!(p.window_sigma > 0.0)) throw argument_error("ssim: window_sigma must be positive");
    if (!(p.k1 > 0.0) || !(p.k2 > 0.0)) throw argument_error("ssim: k1 and k2 must be positive");
    if (!(p.dynamic_range > 0.0)) throw argument_error("ssim: dynamic_range must be positive");
}

std::vector<double> window_kernel(int size, double sigma) {
    int r = size / 2;
    std::vector<double> k(size);
    double sum = 0.0;
    for (int i = -r; i <= r; ++i) {
        double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        k[i + r] = w;
        sum += w;
    }
    for (double& w : k) w /= sum;
    return k;
}

// Weighted local sums over every fully interior window; output is
// (w - 2r) x (h - 2r), row-major.
std::vector<double> filter_valid(const std::vector<double>& field, int w, int h,
                                 const std::vector<double>& kernel) {
    const int size = static_cast<int>(kernel.size());
    const int r = size / 2;
    const int out_w = w - 2 * r, out_h = h - 2 * r;

    std::vector<double> horiz(static_cast<std::size_t>(out_w) * h);
    for (int y = 0; y < h; ++y)
        for (int xi = 0; xi < out_w; ++xi) {
            double acc = 0.0;
            for (int k = 0; k < size; ++k)
                acc += kernel[k] * field[static_cast<std::size_t>(y) * w + xi + k];
            horiz[static_cast<std::size_t>(y) * out_w + xi] = acc;
        }
    std::vector<double> out(static_cast<std::size_t>(out_w) * out_h);
    for (int yi = 0; yi < out_h; ++yi)
        for (int xi = 0; xi < out_w; ++xi) {
            double acc = 0.0;
            for (int k = 0; k < size; ++k)
                acc += kernel[k] * horiz[static_cast<std::size_t>(yi + k) * out_w + xi];
            out[static_cast<std::size_t>(yi) * out_w + xi] = acc;
        }
    return out;
}

}  // namespace

double ssim(const GrayImage& a, const GrayImage& b, const SsimParams& p) {
    validate_params(p);
    if (a.width != b.width || a.height != b.height)
        throw argument_error("ssim: images must have identical dimensions");
    if (a.width < p.window_size || a.height < p.window_size)
        throw argument_error("ssim: images must be at least window_size in each dimension");

    const std::size_t count = a.pixel_count();
    std::vector<double> aa(count), bb(count), ab(count);
    for (std::size_t i = 0; i < count; ++i) {
        aa[i] = a.data[i] * a.data[i];
        bb[i] = b.data[i] * b.data[i];
        ab[i] = a.data[i] * b.data[i];
    }

    const std::vector<double> kernel = window_kernel(p.window_size, p.window_sigma);
    const std::vector<double> mu_a = filter_valid(a.data, a.width, a.height, kernel);
    const std::vector<double> mu_b = filter_valid(b.data, a.width, a.height, kernel);
    const std::vector<double> e_aa = filter_valid(aa, a.width, a.height, kernel);
    const std::vector<double> e_bb = filter_valid(bb, a.width, a.height, kernel);
    const std::vector<double> e_ab = filter_valid(ab, a.width, a.height, kernel);

    const double c1 = (p.k1 * p.dynamic_range) * (p.k1 * p.dynamic_range);
    const double c2 = (p.k2 * p.dynamic_range) * (p.k2 * p.dynamic_range);

    double total = 0.0;
    for (std::size_t i = 0; i < mu_a.size(); ++i) {
        double mu_ab = mu_a[i] * mu_b[i];
        double var_a = e_aa[i] - mu_a[i] * mu_a[i];
        double var_b = e_bb[i] - mu_b[i] * mu_b[i];
        double cov = e_ab[i] - mu_ab;
        double num = (2.0 * mu_ab + c1) * (2.0 * cov + c2);
        double den = (mu_a[i] * mu_a[i] + mu_b[i] * mu_b[i] + c1) * (var_a + var_b + c2);
        total += num / den;
    }
    return total / static_cast<double>(mu_a.size());
}

RenderSet gather_render_set(std::string sketch_id, std::vector<GrayImage> renders) {
    if (renders.empty()) throw argument_error("render set must contain at least one image");
    RenderSet set;
    set.sketch_id = std::move(sketch_id);
    const int w = renders.front().width, h = renders.front().height;
    for (auto& img : renders) {
        if (img.width != w || img.height != h) {
            img = resize_bilinear(img, w, h);
            set.resized = true;
        }
        set.renders.push_back(std::move(img));
    }
    return set;
}

PairwiseSsim mean_pairwise_ssim(const RenderSet& set, const SsimParams& p, int workers) {
    const std::size_t n = set.renders.size();
    if (n < 2) return {1.0, true};

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<double> scores(pairs.size());
    parallel_for(pairs.size(), workers, [&](std::size_t k) {
        scores[k] = ssim(set.renders[pairs[k].first], set.renders[pairs[k].second], p);
    });

    double total = 0.0;
    for (double s : scores) total += s;  // fixed lexicographic order
    return {total / static_cast<double>(scores.size()), false};
}

DiversityScore structural_diversity(const RenderSet& set, const SsimParams& p, int workers) {
    PairwiseSsim mean = mean_pairwise_ssim(set, p, workers);
    return {1.0 - mean.mean, mean.degenerate};
}

}  // namespace sketcheval
