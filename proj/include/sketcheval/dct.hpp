#pragma once

#include <array>
#include <vector>

#include "sketcheval/image.hpp"

namespace sketcheval {

inline constexpr int kDescriptorEdge = 32;
inline constexpr int kDescriptorMaxDims = kDescriptorEdge * kDescriptorEdge;
inline constexpr int kDescriptorDefaultDims = 64;

// Zigzag scan order over an n x n grid: entry k holds (row, col) of the
// k-th coefficient, starting at DC.
std::vector<std::array<int, 2>> zigzag_order(int n);

// Orthonormal 2-D DCT-II of a 32x32 image (row-major in, row-major out).
std::vector<double> dct2_orthonormal_32(const std::vector<double>& pixels);

// Frequency-domain feature vector: resize to 32x32, orthonormal 2-D DCT-II,
// first `dims` coefficients in zigzag order starting at DC.
std::vector<double> dct_descriptor(const GrayImage& img, int dims = kDescriptorDefaultDims);

}  // namespace sketcheval
