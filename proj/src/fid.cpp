// Gaussian feature statistics and the Frechet (squared 2-Wasserstein)
// distance. The product square root uses the symmetric form
// sqrtm(S1^1/2 S2 S1^1/2) so only self-adjoint eigendecompositions occur.

#include "sketcheval/fid.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "sketcheval/errors.hpp"

namespace sketcheval {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMat> map_matrix(const std::vector<double>& values, std::size_t rows,
                                    std::size_t cols) {
    return Eigen::Map<const RowMat>(values.data(), static_cast<Eigen::Index>(rows),
                                    static_cast<Eigen::Index>(cols));
}

void check_finite(const std::vector<double>& values, const char* what) {
    for (double v : values)
        if (!std::isfinite(v))
            throw argument_error(std::string(what) + " contains a non-finite entry");
}

}  // namespace

FeatureMatrix make_feature_matrix(std::size_t n, std::size_t d, FeatureSource source) {
    if (n < 1 || d < 1)
        throw argument_error("feature matrix needs at least one row and one column");
    FeatureMatrix f;
    f.n = n;
    f.d = d;
    f.values.assign(n * d, 0.0);
    f.source = source;
    return f;
}

GaussianStats gaussian_stats(const FeatureMatrix& f) {
    if (f.n < 2)
        throw argument_error("gaussian_stats: at least 2 samples are required, got " +
                             std::to_string(f.n));
    check_finite(f.values, "feature matrix");

    auto x = map_matrix(f.values, f.n, f.d);
    Eigen::RowVectorXd mu = x.colwise().mean();
    RowMat centered = x.rowwise() - mu;
    RowMat cov = (centered.transpose() * centered) / static_cast<double>(f.n - 1);
    cov = ((cov + RowMat(cov.transpose())) * 0.5).eval();

    GaussianStats g;
    g.n = f.n;
    g.mu.assign(mu.data(), mu.data() + mu.size());
    g.sigma.assign(cov.data(), cov.data() + cov.size());
    return g;
}

std::vector<double> sqrtm_psd(const std::vector<double>& m, std::size_t d) {
    if (d < 1 || m.size() != d * d)
        throw argument_error("sqrtm_psd: matrix size does not match dimension");
    check_finite(m, "matrix");

    auto a = map_matrix(m, d, d);
    double asym = (a - RowMat(a.transpose())).cwiseAbs().maxCoeff();
    if (asym > 1e-10)
        throw argument_error("sqrtm_psd: input is not symmetric (max asymmetry " +
                             std::to_string(asym) + ")");

    Eigen::SelfAdjointEigenSolver<RowMat> solver(a);
    if (solver.info() != Eigen::Success)
        throw numerical_error("sqrtm_psd: eigendecomposition failed");

    Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    RowMat result = solver.eigenvectors() * roots.asDiagonal() *
                    solver.eigenvectors().transpose();
    result = ((result + RowMat(result.transpose())) * 0.5).eval();
    return {result.data(), result.data() + result.size()};
}

double frechet_distance(const GaussianStats& g1, const GaussianStats& g2, double eps) {
    if (g1.d() != g2.d())
        throw argument_error("frechet_distance: dimension mismatch (" +
                             std::to_string(g1.d()) + " vs " + std::to_string(g2.d()) + ")");
    if (eps < 0.0) throw argument_error("frechet_distance: eps must be non-negative");

    const std::size_t d = g1.d();
    RowMat s1 = map_matrix(g1.sigma, d, d);
    RowMat s2 = map_matrix(g2.sigma, d, d);
    s1.diagonal().array() += eps;
    s2.diagonal().array() += eps;

    std::vector<double> s1_vec(s1.data(), s1.data() + s1.size());
    std::vector<double> root1 = sqrtm_psd(s1_vec, d);
    RowMat a = map_matrix(root1, d, d);

    RowMat inner = a * s2 * a;
    inner = ((inner + RowMat(inner.transpose())) * 0.5).eval();
    std::vector<double> inner_vec(inner.data(), inner.data() + inner.size());
    std::vector<double> cross = sqrtm_psd(inner_vec, d);
    double trace_cross = 0.0;
    for (std::size_t i = 0; i < d; ++i) trace_cross += cross[i * d + i];

    double mean_term = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double diff = g1.mu[i] - g2.mu[i];
        mean_term += diff * diff;
    }
    double result = mean_term + s1.trace() + s2.trace() - 2.0 * trace_cross;
    return std::max(result, 0.0);
}

FidResult fid(const FeatureMatrix& real, const FeatureMatrix& generated, double eps) {
    if (real.d != generated.d)
        throw argument_error("fid: feature dimension mismatch (" + std::to_string(real.d) +
                             " vs " + std::to_string(generated.d) + ")");

    FidResult result;
    if (real.n < real.d)
        result.warnings.push_back("real feature set has fewer samples (" +
                                  std::to_string(real.n) + ") than dimensions (" +
                                  std::to_string(real.d) + "); covariance is ill-conditioned");
    if (generated.n < generated.d)
        result.warnings.push_back("generated feature set has fewer samples (" +
                                  std::to_string(generated.n) + ") than dimensions (" +
                                  std::to_string(generated.d) +
                                  "); covariance is ill-conditioned");
    result.value = frechet_distance(gaussian_stats(real), gaussian_stats(generated), eps);
    return result;
}

}  // namespace sketcheval
