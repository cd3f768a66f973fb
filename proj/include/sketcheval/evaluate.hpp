#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sketcheval/manifest.hpp"
#include "sketcheval/ssim.hpp"
#include "sketcheval/stats.hpp"

namespace sketcheval {

struct EvaluationConfig {
    double alpha = 0.05;
    double fid_eps = 1e-6;
    SsimParams ssim;
    int descriptor_dims = 64;
    int metric_resolution = 256;  // square working resolution for all metrics
    bool include_sketch_baseline = true;
    bool per_sketch_significance = false;  // aggregate content per sketch before testing
};

struct ReportRow {
    std::string method;
    std::optional<MetricSummary> content;
    std::optional<double> fid;
    std::optional<MetricSummary> diversity;
    std::vector<std::string> warnings;
};

struct SignificanceEntry {
    std::string metric;  // "content" or "diversity"
    std::string method_a;
    std::string method_b;
    TTestResult test;
};

struct ReportProvenance {
    std::string tool_version;
    EvaluationConfig config;
    std::size_t real_images = 0;
    std::size_t sketches = 0;
    std::size_t methods = 0;
    std::size_t renders_total = 0;
    std::vector<std::string> notes;
};

struct EvaluationReport {
    std::vector<ReportRow> rows;
    std::vector<SignificanceEntry> significance;
    ReportProvenance provenance;
};

inline constexpr const char* kSketchBaselineRow = "Conceptual Sketches";

// Reads a JSON config file mirroring EvaluationConfig; absent fields keep
// their defaults, unknown fields are rejected.
EvaluationConfig load_evaluation_config(const std::filesystem::path& path);

// Runs the full protocol: per method, content distance of every render
// against its sketch, pooled FID against the real corpus, and per-sketch
// structural diversity; then Welch tests across all row pairs. A failure
// inside one method voids only that row (recorded in its warnings). The
// result is byte-stable across worker counts.
EvaluationReport evaluate(const Manifest& m, const EvaluationConfig& cfg = {},
                          int workers = 0);

}  // namespace sketcheval
