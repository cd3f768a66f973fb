#include "sketcheval/dct.hpp"

#include <cmath>
#include <numbers>

#include "sketcheval/errors.hpp"

namespace sketcheval {

std::vector<std::array<int, 2>> zigzag_order(int n) {
    std::vector<std::array<int, 2>> order;
    order.reserve(static_cast<std::size_t>(n) * n);
    for (int s = 0; s <= 2 * (n - 1); ++s) {
        if (s % 2 != 0) {
            // odd anti-diagonal: walk down-left
            for (int r = std::max(0, s - n + 1); r <= std::min(s, n - 1); ++r)
                order.push_back({r, s - r});
        } else {
            for (int r = std::min(s, n - 1); r >= std::max(0, s - n + 1); --r)
                order.push_back({r, s - r});
        }
    }
    return order;
}

std::vector<double> dct2_orthonormal_32(const std::vector<double>& pixels) {
    constexpr int n = kDescriptorEdge;
    if (pixels.size() != static_cast<std::size_t>(n) * n)
        throw argument_error("dct2_orthonormal_32 expects a 32x32 block");

    // basis[u][x] = alpha(u) cos(pi (2x+1) u / (2n))
    static const std::vector<double> basis = [] {
        std::vector<double> b(static_cast<std::size_t>(n) * n);
        for (int u = 0; u < n; ++u) {
            double alpha = (u == 0) ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
            for (int x = 0; x < n; ++x)
                b[static_cast<std::size_t>(u) * n + x] =
                    alpha * std::cos(std::numbers::pi * (2.0 * x + 1.0) * u / (2.0 * n));
        }
        return b;
    }();

    // rows, then columns
    std::vector<double> rows(static_cast<std::size_t>(n) * n, 0.0);
    for (int y = 0; y < n; ++y)
        for (int v = 0; v < n; ++v) {
            double acc = 0.0;
            for (int x = 0; x < n; ++x)
                acc += basis[static_cast<std::size_t>(v) * n + x] *
                       pixels[static_cast<std::size_t>(y) * n + x];
            rows[static_cast<std::size_t>(y) * n + v] = acc;
        }
    std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            double acc = 0.0;
            for (int y = 0; y < n; ++y)
                acc += basis[static_cast<std::size_t>(u) * n + y] *
                       rows[static_cast<std::size_t>(y) * n + v];
            out[static_cast<std::size_t>(u) * n + v] = acc;
        }
    return out;
}

std::vector<double> dct_descriptor(const GrayImage& img, int dims) {
    if (dims < 1 || dims > kDescriptorMaxDims)
        throw argument_error("dct_descriptor: dims must be in [1, 1024]");

    GrayImage small = resize_bilinear(img, kDescriptorEdge, kDescriptorEdge);
    std::vector<double> coeffs = dct2_orthonormal_32(small.data);

    static const std::vector<std::array<int, 2>> zz = zigzag_order(kDescriptorEdge);
    std::vector<double> desc(static_cast<std::size_t>(dims));
    for (int k = 0; k < dims; ++k)
        desc[k] = coeffs[static_cast<std::size_t>(zz[k][0]) * kDescriptorEdge + zz[k][1]];
    return desc;
}

}  // namespace sketcheval
