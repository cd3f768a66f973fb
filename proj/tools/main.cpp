// sketcheval CLI: batch evaluation plus direct access to the individual
// measures. Results go to stdout (or --out); diagnostics go to stderr.
// Exit codes: 0 success, 1 input/format error, 2 numerical failure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sketcheval/content.hpp"
#include "sketcheval/dct.hpp"
#include "sketcheval/edges.hpp"
#include "sketcheval/errors.hpp"
#include "sketcheval/evaluate.hpp"
#include "sketcheval/features.hpp"
#include "sketcheval/fid.hpp"
#include "sketcheval/image.hpp"
#include "sketcheval/manifest.hpp"
#include "sketcheval/report.hpp"
#include "sketcheval/ssim.hpp"
#include "sketcheval/stats.hpp"
#include "sketcheval/synthbench.hpp"
#include "sketcheval/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace sketcheval;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw input_error("cannot open output file: " + out_path);
    out << text;
}

bool has_image_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<fs::path> list_images(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw input_error("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && has_image_extension(entry.path()))
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

FeatureMatrix features_from_arg(const std::string& arg, int dims) {
    fs::path p(arg);
    if (fs::is_directory(p)) {
        std::vector<fs::path> files = list_images(p);
        if (files.empty()) throw input_error("no images found in " + p.string());
        FeatureMatrix f = make_feature_matrix(files.size(), static_cast<std::size_t>(dims));
        for (std::size_t i = 0; i < files.size(); ++i) {
            std::vector<double> desc = dct_descriptor(load_image(files[i]), dims);
            std::copy(desc.begin(), desc.end(), f.values.begin() + static_cast<long>(i) * dims);
        }
        return f;
    }
    return load_feature_csv(p).matrix;
}

// column spec: file.csv:column, where column is a header name or 0-based index
std::vector<double> column_from_spec(const std::string& spec) {
    std::size_t colon = spec.rfind(':');
    if (colon == std::string::npos || colon + 1 == spec.size())
        throw argument_error("column spec must look like file.csv:column, got '" + spec + "'");
    fs::path file(spec.substr(0, colon));
    std::string column = spec.substr(colon + 1);

    std::ifstream in(file);
    if (!in) throw input_error("cannot open csv file: " + file.string());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) rows.push_back(split_csv_line(line));
    }
    if (rows.empty()) throw format_error(file.string() + ": empty csv file");

    long index = -1;
    bool numeric_spec = !column.empty() &&
                        column.find_first_not_of("0123456789") == std::string::npos;
    if (numeric_spec) {
        index = std::stol(column);
    } else {
        for (std::size_t c = 0; c < rows[0].size(); ++c)
            if (rows[0][c] == column) index = static_cast<long>(c);
        if (index < 0)
            throw format_error(file.string() + ": no column named '" + column + "'");
    }

    std::vector<double> values;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (index >= static_cast<long>(rows[r].size())) continue;
        const std::string& cell = rows[r][index];
        char* end = nullptr;
        double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str() || *end != '\0') {
            if (r == 0) continue;  // header row
            throw format_error(file.string() + ":" + std::to_string(r + 1) +
                               ": non-numeric cell '" + cell + "'");
        }
        values.push_back(v);
    }
    if (values.empty())
        throw format_error(file.string() + ": column '" + column + "' holds no numbers");
    return values;
}

int run(int argc, char** argv) {
    CLI::App app{std::string(kToolVersion) +
                 " - automated measures for sketch-to-render design pipelines"};
    app.require_subcommand(1);

    // evaluate
    auto* cmd_eval = app.add_subcommand("evaluate", "run the full benchmark protocol");
    std::string manifest_path, config_path, format = "text", out_path;
    int workers = 0;
    bool per_sketch = false;
    cmd_eval->add_option("--manifest", manifest_path, "dataset manifest (json)")->required();
    cmd_eval->add_option("--config", config_path, "evaluation config (json)");
    cmd_eval->add_option("--format", format, "text, csv, or json")->capture_default_str();
    cmd_eval->add_option("--out", out_path, "write the report to a file");
    cmd_eval->add_option("--workers", workers, "worker threads (0 = hardware)");
    cmd_eval->add_flag("--per-sketch", per_sketch,
                       "aggregate content distances per sketch before the t-tests");

    // sketch
    auto* cmd_sketch = app.add_subcommand("sketch", "synthesize sketches from photographs");
    std::string sketch_input, sketch_mode = "canny", sketch_out;
    SketchParams sketch_params;
    cmd_sketch->add_option("--input", sketch_input, "image file or directory")->required();
    cmd_sketch->add_option("--mode", sketch_mode, "canny or hough")->capture_default_str();
    cmd_sketch->add_option("--sigma", sketch_params.canny.sigma)->capture_default_str();
    cmd_sketch->add_option("--low", sketch_params.canny.low)->capture_default_str();
    cmd_sketch->add_option("--high", sketch_params.canny.high)->capture_default_str();
    cmd_sketch->add_option("--theta-steps", sketch_params.hough.theta_steps)
        ->capture_default_str();
    cmd_sketch->add_option("--rho-resolution", sketch_params.hough.rho_resolution)
        ->capture_default_str();
    cmd_sketch->add_option("--min-votes", sketch_params.hough.min_votes)->capture_default_str();
    cmd_sketch->add_option("--out", sketch_out, "output directory")->required();

    // ssim
    auto* cmd_ssim = app.add_subcommand("ssim", "SSIM between two images");
    std::string ssim_a, ssim_b;
    cmd_ssim->add_option("--a", ssim_a)->required();
    cmd_ssim->add_option("--b", ssim_b)->required();

    // diversity
    auto* cmd_div = app.add_subcommand("diversity",
                                       "structural diversity of one render set");
    std::string div_dir;
    cmd_div->add_option("--dir", div_dir, "directory holding the render set")->required();

    // fid
    auto* cmd_fid = app.add_subcommand("fid", "Frechet distance between feature sets");
    std::string fid_real, fid_gen;
    double fid_eps = 1e-6;
    int fid_dims = kDescriptorDefaultDims;
    cmd_fid->add_option("--real", fid_real, "image directory or feature csv")->required();
    cmd_fid->add_option("--generated", fid_gen, "image directory or feature csv")->required();
    cmd_fid->add_option("--eps", fid_eps, "covariance regularizer")->capture_default_str();
    cmd_fid->add_option("--dims", fid_dims, "built-in descriptor dimensions")
        ->capture_default_str();

    // content
    auto* cmd_content = app.add_subcommand("content", "content distance sketch vs render");
    std::string content_sketch, content_render, content_embeddings;
    bool l1_raw = false;
    cmd_content->add_option("--sketch", content_sketch, "image path, or id with --embeddings")
        ->required();
    cmd_content->add_option("--render", content_render, "image path, or id with --embeddings")
        ->required();
    cmd_content->add_option("--embeddings", content_embeddings, "embedding csv");
    cmd_content->add_flag("--l1-raw", l1_raw, "raw L1 sum instead of the per-dimension mean");

    // ttest
    auto* cmd_ttest = app.add_subcommand("ttest", "two-tailed two-sample t-test");
    std::string ttest_a, ttest_b;
    double alpha = 0.05;
    bool pooled = false;
    cmd_ttest->add_option("--a", ttest_a, "csv column spec file.csv:column")->required();
    cmd_ttest->add_option("--b", ttest_b, "csv column spec file.csv:column")->required();
    cmd_ttest->add_option("--alpha", alpha)->capture_default_str();
    cmd_ttest->add_flag("--pooled", pooled, "pooled-variance Student form");

    // synth-benchmark
    auto* cmd_synth = app.add_subcommand("synth-benchmark",
                                         "generate the bundled synthetic benchmark");
    std::string synth_out;
    unsigned synth_seed = 20240901;
    cmd_synth->add_option("--out", synth_out, "output directory")->required();
    cmd_synth->add_option("--seed", synth_seed)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (*cmd_eval) {
        EvaluationConfig cfg;
        if (!config_path.empty()) cfg = load_evaluation_config(config_path);
        if (per_sketch) cfg.per_sketch_significance = true;
        Manifest manifest = load_manifest(manifest_path);
        EvaluationReport report = evaluate(manifest, cfg, workers);
        emit(render_report(report, parse_report_format(format)), out_path);
        for (const ReportRow& row : report.rows)
            for (const std::string& w : row.warnings)
                std::cerr << "warning: " << row.method << ": " << w << "\n";
    } else if (*cmd_sketch) {
        if (sketch_mode == "canny") sketch_params.mode = SketchMode::canny;
        else if (sketch_mode == "hough") sketch_params.mode = SketchMode::hough;
        else throw argument_error("unknown sketch mode '" + sketch_mode + "'");
        fs::create_directories(sketch_out);
        std::vector<fs::path> inputs;
        if (fs::is_directory(sketch_input)) inputs = list_images(sketch_input);
        else inputs.push_back(sketch_input);
        if (inputs.empty()) throw input_error("no images found in " + sketch_input);
        for (const fs::path& in : inputs) {
            GrayImage sketch = synthesize_sketch(load_image(in), sketch_params);
            fs::path out = fs::path(sketch_out) / (in.stem().string() + ".png");
            save_png(sketch, out);
            std::cout << out.string() << "\n";
        }
    } else if (*cmd_ssim) {
        std::cout << ssim(load_image(ssim_a), load_image(ssim_b)) << "\n";
    } else if (*cmd_div) {
        std::vector<fs::path> files = list_images(div_dir);
        if (files.empty()) throw input_error("no images found in " + div_dir);
        std::vector<GrayImage> images;
        for (const fs::path& f : files) images.push_back(load_image(f));
        RenderSet set = gather_render_set(div_dir, std::move(images));
        if (set.resized) std::cerr << "warning: renders were resized to a common size\n";
        DiversityScore score = structural_diversity(set);
        if (score.degenerate)
            std::cerr << "warning: single render; diversity is 0 by convention\n";
        std::cout << score.value << "\n";
    } else if (*cmd_fid) {
        FeatureMatrix real = features_from_arg(fid_real, fid_dims);
        FeatureMatrix gen = features_from_arg(fid_gen, fid_dims);
        if (real.source != gen.source)
            std::cerr << "warning: comparing built-in descriptors against external "
                         "features; make sure both sides share one feature space\n";
        FidResult result = fid(real, gen, fid_eps);
        for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
        std::cout << result.value << "\n";
    } else if (*cmd_content) {
        ContentEmbedding sketch, render;
        if (!content_embeddings.empty()) {
            std::vector<ContentEmbedding> table = load_embeddings(content_embeddings);
            auto find = [&](const std::string& id) {
                for (const ContentEmbedding& e : table)
                    if (e.id == id) return e;
                throw input_error(content_embeddings + ": no embedding with id '" + id + "'");
            };
            sketch = find(content_sketch);
            render = find(content_render);
        } else {
            sketch = proxy_content_encoding(load_image(content_sketch), content_sketch);
            render = proxy_content_encoding(load_image(content_render), content_render);
        }
        std::cout << content_distance(sketch, render, !l1_raw) << "\n";
    } else if (*cmd_ttest) {
        TTestResult r = welch_t_test(column_from_spec(ttest_a), column_from_spec(ttest_b),
                                     alpha, pooled ? TTestKind::pooled : TTestKind::welch);
        std::cout << "t = " << r.t << "\ndf = " << r.df << "\np = " << r.p
                  << "\nsignificant = " << (r.significant ? "true" : "false") << "\n";
    } else if (*cmd_synth) {
        fs::path manifest = generate_synth_benchmark(synth_out, synth_seed);
        std::cout << manifest.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const eval_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
