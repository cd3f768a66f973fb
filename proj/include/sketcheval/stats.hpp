#pragma once

#include <cstddef>
#include <vector>

namespace sketcheval {

struct MetricSummary {
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation (divisor n-1); 0 when n = 1
    std::size_t n = 0;
};

MetricSummary summarize(const std::vector<double>& values);

struct TTestResult {
    double t = 0.0;
    double df = 0.0;   // Welch-Satterthwaite, real-valued
    double p = 1.0;    // two-tailed
    bool significant = false;
};

enum class TTestKind { welch, pooled };

// Two-tailed two-sample t-test, Welch's form by default. Both samples need
// n >= 2. Zero variance in both samples with equal means gives t = 0, p = 1.
TTestResult welch_t_test(const std::vector<double>& a, const std::vector<double>& b,
                         double alpha = 0.05, TTestKind kind = TTestKind::welch);

// Regularized incomplete beta I_x(a, b), continued fraction by the modified
// Lentz method (absolute tolerance 1e-10, at most 300 iterations).
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace sketcheval
