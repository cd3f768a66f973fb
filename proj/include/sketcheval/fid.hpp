#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sketcheval {

enum class FeatureSource { builtin_descriptor, external_file };

// n x d row-major matrix of per-image features, all entries finite.
struct FeatureMatrix {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<double> values;
    FeatureSource source = FeatureSource::builtin_descriptor;

    double at(std::size_t row, std::size_t col) const { return values[row * d + col]; }
    double& at(std::size_t row, std::size_t col) { return values[row * d + col]; }
};

FeatureMatrix make_feature_matrix(std::size_t n, std::size_t d,
                                  FeatureSource source = FeatureSource::builtin_descriptor);

// Mean vector and symmetrized unbiased sample covariance (divisor n-1).
struct GaussianStats {
    std::vector<double> mu;
    std::vector<double> sigma;  // d x d row-major, symmetric
    std::size_t n = 0;

    std::size_t d() const { return mu.size(); }
};

// Requires n >= 2. Covariance is symmetrized as (S + S^T)/2.
GaussianStats gaussian_stats(const FeatureMatrix& f);

// Principal square root of a symmetric PSD matrix (d x d row-major) via
// eigendecomposition; negative eigenvalues from round-off are clamped to 0.
// Input must be symmetric within 1e-10.
std::vector<double> sqrtm_psd(const std::vector<double>& m, std::size_t d);

// Squared 2-Wasserstein distance between Gaussians:
//   |mu1 - mu2|^2 + Tr(S1' + S2' - 2 (S1'^1/2 S2' S1'^1/2)^1/2)
// with Si' = Si + eps I. Round-off negatives are clamped to 0.
double frechet_distance(const GaussianStats& g1, const GaussianStats& g2,
                        double eps = 1e-6);

struct FidResult {
    double value = 0.0;
    std::vector<std::string> warnings;
};

// Frechet distance between the Gaussian statistics of two feature sets.
// Attaches a warning when either set has fewer samples than dimensions.
FidResult fid(const FeatureMatrix& real, const FeatureMatrix& generated,
              double eps = 1e-6);

}  // namespace sketcheval
