#pragma once

#include <string>
#include <vector>

#include "sketcheval/image.hpp"

namespace sketcheval {

struct SsimParams {
    int window_size = 11;       // odd, >= 3
    double window_sigma = 1.5;
    double k1 = 0.01;
    double k2 = 0.03;
    double dynamic_range = 1.0;
};

// Renders produced from one conceptual sketch; all share one resolution.
struct RenderSet {
    std::string sketch_id;
    std::vector<GrayImage> renders;
    bool resized = false;  // set when gather() had to align dimensions
};

// Builds a RenderSet; renders whose dimensions differ from the first are
// resized bilinearly to match and the `resized` flag is set.
RenderSet gather_render_set(std::string sketch_id, std::vector<GrayImage> renders);

// Mean SSIM over all fully interior Gaussian windows. Requires identical
// dimensions, both at least window_size in each direction.
double ssim(const GrayImage& a, const GrayImage& b, const SsimParams& p = {});

struct PairwiseSsim {
    double mean = 1.0;
    bool degenerate = false;  // fewer than 2 renders: maximally self-similar
};

// Mean ssim over all C(n,2) unordered pairs, summed in lexicographic pair
// order so the result is independent of any parallel schedule.
PairwiseSsim mean_pairwise_ssim(const RenderSet& set, const SsimParams& p = {},
                                int workers = 1);

struct DiversityScore {
    double value = 0.0;
    bool degenerate = false;
};

// 1 - mean pairwise SSIM. Unclamped; identical render sets and singleton
// sets score exactly 0.
DiversityScore structural_diversity(const RenderSet& set, const SsimParams& p = {},
                                    int workers = 1);

}  // namespace sketcheval
