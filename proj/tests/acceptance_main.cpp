// Acceptance suite: one check per shipped guarantee, one pass/fail line per
// check. Exit status is the number of failed checks.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sketcheval/content.hpp"
#include "sketcheval/edges.hpp"
#include "sketcheval/evaluate.hpp"
#include "sketcheval/fid.hpp"
#include "sketcheval/image.hpp"
#include "sketcheval/manifest.hpp"
#include "sketcheval/report.hpp"
#include "sketcheval/ssim.hpp"
#include "sketcheval/stats.hpp"
#include "sketcheval/synthbench.hpp"

using namespace sketcheval;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    std::string name;
    double time_limit_s;  // 0 = no limit
    std::function<Outcome()> run;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

GaussianStats diagonal_stats(const std::vector<double>& mu, const std::vector<double>& sd) {
    GaussianStats g;
    g.mu = mu;
    g.n = 1000;
    g.sigma.assign(mu.size() * mu.size(), 0.0);
    for (std::size_t i = 0; i < mu.size(); ++i) g.sigma[i * mu.size() + i] = sd[i] * sd[i];
    return g;
}

Outcome check_frechet_closed_form() {
    oracles::TestRng rng(1001);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t d = (trial < 25) ? 1 : static_cast<std::size_t>(rng.range(2, 8));
        std::vector<double> mu1(d), mu2(d), sd1(d), sd2(d);
        for (std::size_t i = 0; i < d; ++i) {
            mu1[i] = 3.0 * rng.normal();
            mu2[i] = 3.0 * rng.normal();
            sd1[i] = 0.2 + 2.0 * rng.unit();
            sd2[i] = 0.2 + 2.0 * rng.unit();
        }
        double got = frechet_distance(diagonal_stats(mu1, sd1), diagonal_stats(mu2, sd2), 0.0);
        double want = oracles::ref_frechet_diagonal(mu1, sd1, mu2, sd2);
        double rel = std::abs(got - want) / std::max(std::abs(want), 1e-12);
        worst = std::max(worst, rel);
        if (rel > 1e-6)
            return fail("case " + std::to_string(trial) + ": got " + fmt(got) + ", want " +
                        fmt(want) + " (rel err " + fmt(rel) + ")");
    }
    return {true, "50 cases, max rel err " + fmt(worst)};
}

Outcome check_sqrtm_reconstruction() {
    oracles::TestRng rng(2002);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t d = static_cast<std::size_t>(rng.range(2, 64));
        std::vector<double> a(d * d);
        for (double& v : a) v = rng.normal();
        std::vector<double> m(d * d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < d; ++k) acc += a[i * d + k] * a[j * d + k];
                m[i * d + j] = acc;
                m[j * d + i] = acc;
            }
        std::vector<double> s = sqrtm_psd(m, d);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < d; ++k) acc += s[i * d + k] * s[k * d + j];
                double diff = acc - m[i * d + j];
                num += diff * diff;
                den += m[i * d + j] * m[i * d + j];
            }
        double rel = std::sqrt(num) / std::max(std::sqrt(den), 1e-12);
        worst = std::max(worst, rel);
        if (rel > 1e-8)
            return fail("case " + std::to_string(trial) + " (d=" + std::to_string(d) +
                        "): rel err " + fmt(rel));
    }
    return {true, "100 matrices up to 64x64, max rel err " + fmt(worst)};
}

Outcome check_fid_identity_and_shift() {
    oracles::TestRng rng(3003);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.range(12, 40));
        std::size_t d = static_cast<std::size_t>(rng.range(2, 8));
        FeatureMatrix x = make_feature_matrix(n, d);
        for (double& v : x.values) v = rng.normal();

        double self = fid(x, x, 1e-6).value;
        if (self > 1e-8) return fail("fid(X, X) = " + fmt(self));

        std::vector<double> shift(d);
        double norm2 = 0.0;
        for (double& v : shift) {
            v = 2.0 * rng.unit() - 1.0;
            norm2 += v * v;
        }
        FeatureMatrix shifted = x;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < d; ++c) shifted.at(r, c) += shift[c];
        double got = fid(x, shifted, 0.0).value;
        double rel = std::abs(got - norm2) / std::max(norm2, 1e-12);
        worst = std::max(worst, rel);
        if (rel > 1e-6)
            return fail("mean shift case " + std::to_string(trial) + ": got " + fmt(got) +
                        ", want " + fmt(norm2));
    }
    return {true, "10 cases, max rel err " + fmt(worst)};
}

Outcome check_ssim_suite() {
    oracles::TestRng rng(4004);
    for (int trial = 0; trial < 20; ++trial) {
        GrayImage img = oracles::random_image(rng, rng.range(11, 48), rng.range(11, 48));
        double s = ssim(img, img);
        if (std::abs(s - 1.0) > 1e-12)
            return fail("ssim(x, x) = " + fmt(s) + " on case " + std::to_string(trial));
    }
    double constant = ssim(make_image(16, 16, 0.5), make_image(16, 16, 0.25));
    if (std::abs(constant - 0.80007) > 1e-4)
        return fail("constant 0.5-vs-0.25 case: got " + fmt(constant) + ", want 0.80007");
    for (int trial = 0; trial < 10; ++trial) {
        GrayImage a = oracles::random_image(rng, 20, 20);
        GrayImage b = oracles::random_image(rng, 20, 20);
        if (std::abs(ssim(a, b) - ssim(b, a)) > 1e-12)
            return fail("asymmetric ssim on case " + std::to_string(trial));
    }
    return {true, "identity, constant closed form, symmetry"};
}

Outcome check_diversity_exact_zeros() {
    oracles::TestRng rng(5005);
    for (int copies : {2, 5, 10}) {
        GrayImage img = oracles::random_image(rng, 24, 24);
        RenderSet set = gather_render_set("s", std::vector<GrayImage>(copies, img));
        double v = structural_diversity(set).value;
        if (v != 0.0)
            return fail("identical set of " + std::to_string(copies) + " scored " + fmt(v));
    }
    RenderSet singleton = gather_render_set("s", {oracles::random_image(rng, 24, 24)});
    DiversityScore d = structural_diversity(singleton);
    if (d.value != 0.0 || !d.degenerate)
        return fail("singleton set scored " + fmt(d.value));
    return {true, "identical sets and singletons score exactly 0.0"};
}

Outcome check_welch_oracle() {
    std::vector<double> a = {1, 2, 3, 4, 5}, b = {2, 3, 4, 5, 6};
    TTestResult hand = welch_t_test(a, b, 0.05);
    if (std::abs(hand.t + 1.0) > 1e-12 || std::abs(hand.df - 8.0) > 1e-12)
        return fail("hand case: t = " + fmt(hand.t) + ", df = " + fmt(hand.df));
    if (std::abs(hand.p - 0.3466) > 1e-3)
        return fail("hand case: p = " + fmt(hand.p) + ", want 0.3466");

    oracles::TestRng rng(6006);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x, y;
        int nx = rng.range(3, 30), ny = rng.range(3, 30);
        for (int i = 0; i < nx; ++i) x.push_back(rng.normal());
        for (int i = 0; i < ny; ++i) y.push_back(0.8 * rng.normal() + 0.5 * rng.unit());
        TTestResult r = welch_t_test(x, y, 0.05);
        double want = oracles::ref_t_two_tailed_p(r.t, r.df);
        worst = std::max(worst, std::abs(r.p - want));
        if (std::abs(r.p - want) > 1e-4)
            return fail("case " + std::to_string(trial) + ": p = " + fmt(r.p) + ", oracle " +
                        fmt(want));
    }
    return {true, "hand case + 20 integration checks, max |dp| " + fmt(worst)};
}

Outcome check_canny_hough() {
    EdgeMap flat = canny(make_image(16, 16, 0.6), 1.0, 0.1, 0.3);
    for (auto v : flat.data)
        if (v != 0) return fail("constant image produced edge pixels");

    GrayImage step = make_image(16, 16, 0.0);
    for (int y = 0; y < 16; ++y)
        for (int x = 8; x < 16; ++x) step.at(x, y) = 1.0;
    EdgeMap edges = canny(step, 1.0, 0.1, 0.3);
    std::set<int> columns;
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x)
            if (edges.at(x, y)) columns.insert(x);
    if (columns.size() != 1 || (*columns.begin() != 7 && *columns.begin() != 8))
        return fail("step edge is not a single boundary column (" +
                    std::to_string(columns.size()) + " columns)");

    EdgeMap column;
    column.width = 16;
    column.height = 16;
    column.data.assign(256, 0);
    for (int y = 0; y < 16; ++y) column.at(5, y) = 1;
    std::vector<HoughLine> lines = hough_lines(column, 180, 1.0, 8);
    if (lines.empty()) return fail("no hough line found for the column");
    if (lines[0].theta != 0.0 || std::abs(lines[0].rho - 5.0) > 1.0)
        return fail("top line (rho=" + fmt(lines[0].rho) + ", theta=" + fmt(lines[0].theta) +
                    ") not within one cell of (5, 0)");
    oracles::HoughAccumulator acc = oracles::ref_hough_accumulator(column, 180, 1.0);
    int best = 0;
    for (int v : acc.votes) best = std::max(best, v);
    if (lines[0].votes != best)
        return fail("top line votes " + std::to_string(lines[0].votes) +
                    " != brute-force max " + std::to_string(best));
    return {true, "constant, step, and column cases agree with the oracle"};
}

Outcome check_end_to_end() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("sketcheval_acceptance_" + std::to_string(::getpid()));
    struct Cleanup {
        fs::path p;
        ~Cleanup() {
            std::error_code ec;
            fs::remove_all(p, ec);
        }
    } cleanup{dir};

    fs::path manifest_path = generate_synth_benchmark(dir);
    Manifest manifest = load_manifest(manifest_path);

    auto t0 = std::chrono::steady_clock::now();
    EvaluationReport first = evaluate(manifest, {}, 1);
    double eval_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (eval_seconds >= 60.0)
        return fail("evaluate took " + fmt(eval_seconds) + " s (limit 60 s)");

    EvaluationReport second = evaluate(manifest, {}, 3);
    std::string json1 = render_report(first, ReportFormat::json);
    std::string json2 = render_report(second, ReportFormat::json);
    if (json1 != json2) return fail("worker counts 1 and 3 disagree byte-wise");

    auto row = [&](const std::string& name) -> const ReportRow& {
        for (const ReportRow& r : first.rows)
            if (r.method == name) return r;
        throw std::runtime_error("missing row " + name);
    };
    const ReportRow& identity = row("identity");
    const ReportRow& noisy = row("noisy-copy");
    const ReportRow& shuffled = row("shuffled-unrelated");

    auto margin_ok = [](const MetricSummary& low, const MetricSummary& high) {
        return high.mean - low.mean > 3.0 * std::max(low.std, high.std);
    };
    if (!identity.content || !noisy.content || !shuffled.content)
        return fail("missing content summaries");
    if (!(identity.content->mean < noisy.content->mean &&
          noisy.content->mean < shuffled.content->mean))
        return fail("content ordering violated: " + fmt(identity.content->mean) + " / " +
                    fmt(noisy.content->mean) + " / " + fmt(shuffled.content->mean));
    if (!margin_ok(*identity.content, *noisy.content) ||
        !margin_ok(*noisy.content, *shuffled.content))
        return fail("content margins below 3x std");
    if (!identity.diversity || !noisy.diversity) return fail("missing diversity summaries");
    if (!(noisy.diversity->mean > identity.diversity->mean) ||
        !margin_ok(*identity.diversity, *noisy.diversity))
        return fail("diversity margin below 3x std: identity " +
                    fmt(identity.diversity->mean) + ", noisy " + fmt(noisy.diversity->mean));

    std::ostringstream detail;
    detail << "evaluate " << fmt(eval_seconds) << " s, byte-identical across workers, "
           << "content " << fmt(identity.content->mean) << " < " << fmt(noisy.content->mean)
           << " < " << fmt(shuffled.content->mean);
    return {true, detail.str()};
}

Outcome check_report_fidelity() {
    EvaluationReport r;
    ReportRow row;
    row.method = "MUNIT";
    row.content = MetricSummary{0.43, 0.15, 240};
    row.fid = 188.05;
    row.diversity = MetricSummary{0.37, 0.22, 24};
    r.rows.push_back(row);
    r.provenance.tool_version = "acceptance";

    std::string text = render_report(r, ReportFormat::text);
    std::istringstream lines(text);
    std::string header, rule, data;
    std::getline(lines, header);
    std::getline(lines, rule);
    std::getline(lines, data);

    auto cell = [](const std::string& line, int index) {
        std::size_t start = 0;
        for (int i = 0; i < index; ++i) start = line.find('|', start) + 1;
        std::size_t end = line.find('|', start);
        std::string c = line.substr(start, end - start);
        std::size_t b = c.find_first_not_of(' ');
        std::size_t e = c.find_last_not_of(' ');
        return b == std::string::npos ? std::string() : c.substr(b, e - b + 1);
    };
    if (cell(header, 1) != "Content Distance ↓" || cell(header, 2) != "FID ↓" ||
        cell(header, 3) != "Structural Diversity ↑")
        return fail("arrow headers malformed: " + header);
    if (cell(data, 0) != "MUNIT" || cell(data, 1) != "0.43 ± 0.15" ||
        cell(data, 2) != "188.05" || cell(data, 3) != "0.37 ± 0.22")
        return fail("row cells malformed: " + data);
    return {true, "columns print 0.43 ± 0.15 | 188.05 | 0.37 ± 0.22"};
}

}  // namespace

int main() {
    std::vector<Check> checks = {
        {"Frechet closed-form oracle", 1.0, check_frechet_closed_form},
        {"matrix square root reconstruction", 5.0, check_sqrtm_reconstruction},
        {"FID identity and mean shift", 2.0, check_fid_identity_and_shift},
        {"SSIM suite", 0.0, check_ssim_suite},
        {"structural diversity exact zeros", 0.0, check_diversity_exact_zeros},
        {"Welch t-test oracle", 0.0, check_welch_oracle},
        {"Canny and Hough", 0.0, check_canny_hough},
        {"end-to-end determinism and ordering", 0.0, check_end_to_end},
        {"report fidelity", 0.0, check_report_fidelity},
    };

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        Outcome outcome;
        auto t0 = std::chrono::steady_clock::now();
        try {
            outcome = checks[i].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (outcome.pass && checks[i].time_limit_s > 0.0 &&
            elapsed > checks[i].time_limit_s) {
            outcome.pass = false;
            outcome.detail = "exceeded " + fmt(checks[i].time_limit_s) + " s time limit (" +
                             fmt(elapsed) + " s)";
        }
        std::printf("[%s] %zu. %s (%s) [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    checks[i].name.c_str(), outcome.detail.c_str(), elapsed);
        if (!outcome.pass) ++failures;
    }
    if (failures > 0) std::printf("%d of %zu checks failed\n", failures, checks.size());
    return failures;
}
