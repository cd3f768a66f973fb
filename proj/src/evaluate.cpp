// End-to-end protocol: per-method content distance, pooled FID, per-sketch
// structural diversity, then Welch tests across all row pairs. Every
// reduction folds in manifest index order, so reports are byte-stable
// across worker counts.

#include "sketcheval/evaluate.hpp"

#include <optional>
#include <unordered_map>
#include <utility>

#include "sketcheval/content.hpp"
#include "sketcheval/dct.hpp"
#include "sketcheval/errors.hpp"
#include "sketcheval/features.hpp"
#include "sketcheval/fid.hpp"
#include "sketcheval/parallel.hpp"
#include "sketcheval/version.hpp"

namespace sketcheval {

namespace {

struct RowSamples {
    std::vector<double> content;      // per render, manifest order
    std::vector<double> per_sketch;   // content aggregated per sketch
    std::vector<double> diversity;    // per sketch
};

void validate_config(const EvaluationConfig& cfg) {
    if (!(cfg.alpha > 0.0) || !(cfg.alpha < 1.0))
        throw argument_error("config: alpha must be in (0, 1)");
    if (cfg.fid_eps < 0.0) throw argument_error("config: fid_eps must be non-negative");
    if (cfg.descriptor_dims < 1 || cfg.descriptor_dims > kDescriptorMaxDims)
        throw argument_error("config: descriptor_dims must be in [1, 1024]");
    if (cfg.metric_resolution < kProxyGrid || cfg.metric_resolution < cfg.ssim.window_size)
        throw argument_error("config: metric_resolution too small for the configured metrics");
}

std::vector<GrayImage> load_resized(const std::vector<FileRef>& refs, int resolution,
                                    int workers) {
    std::vector<GrayImage> images(refs.size());
    parallel_for(refs.size(), workers, [&](std::size_t i) {
        images[i] = resize_bilinear(load_image(refs[i].path), resolution, resolution);
    });
    return images;
}

FeatureMatrix builtin_features(const std::vector<GrayImage>& images, int dims, int workers) {
    FeatureMatrix f = make_feature_matrix(images.size(), static_cast<std::size_t>(dims));
    parallel_for(images.size(), workers, [&](std::size_t i) {
        std::vector<double> desc = dct_descriptor(images[i], dims);
        std::copy(desc.begin(), desc.end(),
                  f.values.begin() + static_cast<long>(i) * dims);
    });
    return f;
}

ContentEmbedding table_embedding(const FeatureTable& table, const std::string& id,
                                 const std::string& file) {
    long idx = table.find(id);
    if (idx < 0)
        throw input_error(file + ": no embedding row for manifest id '" + id + "'");
    ContentEmbedding emb;
    emb.id = id;
    auto begin = table.matrix.values.begin() + idx * static_cast<long>(table.matrix.d);
    emb.values.assign(begin, begin + static_cast<long>(table.matrix.d));
    emb.encoder_tag = EncoderTag::external;
    return emb;
}

}  // namespace

EvaluationReport evaluate(const Manifest& m, const EvaluationConfig& cfg, int workers) {
    validate_config(cfg);
    workers = resolve_workers(workers);

    EvaluationReport report;
    report.provenance.tool_version = kToolVersion;
    report.provenance.config = cfg;
    report.provenance.real_images = m.real_images.size();
    report.provenance.sketches = m.sketches.size();
    report.provenance.methods = m.methods.size();

    // Shared corpus; failures here void the whole run.
    const std::vector<GrayImage> real_images =
        load_resized(m.real_images, cfg.metric_resolution, workers);
    const std::vector<GrayImage> sketch_images =
        load_resized(m.sketches, cfg.metric_resolution, workers);

    std::unordered_map<std::string, std::size_t> sketch_index;
    for (std::size_t i = 0; i < m.sketches.size(); ++i)
        sketch_index[m.sketches[i].id] = i;

    std::vector<ContentEmbedding> sketch_proxy(m.sketches.size());
    parallel_for(m.sketches.size(), workers, [&](std::size_t i) {
        sketch_proxy[i] = proxy_content_encoding(sketch_images[i], m.sketches[i].id);
    });

    std::optional<FeatureMatrix> real_builtin;
    auto get_real_builtin = [&]() -> const FeatureMatrix& {
        if (!real_builtin)
            real_builtin = builtin_features(real_images, cfg.descriptor_dims, workers);
        return *real_builtin;
    };
    std::optional<FeatureMatrix> real_external;
    auto get_real_external = [&]() -> const FeatureMatrix& {
        if (!real_external) {
            FeatureTable table = load_feature_csv(*m.real_features_file);
            FeatureMatrix f;
            f.n = m.real_images.size();
            f.d = table.matrix.d;
            f.source = FeatureSource::external_file;
            for (const auto& ref : m.real_images) {
                long idx = table.find(ref.id);
                if (idx < 0)
                    throw input_error(m.real_features_file->string() +
                                      ": no feature row for real image '" + ref.id + "'");
                auto begin = table.matrix.values.begin() +
                             idx * static_cast<long>(table.matrix.d);
                f.values.insert(f.values.end(), begin,
                                begin + static_cast<long>(table.matrix.d));
            }
            real_external = std::move(f);
        }
        return *real_external;
    };

    std::vector<RowSamples> samples;
    bool any_external_fid = false, any_builtin_fid = false;

    for (const MethodEntry& method : m.methods) {
        ReportRow row;
        row.method = method.name;
        RowSamples row_samples;
        try {
            if (method.render_groups.empty())
                throw argument_error("method has no render groups");

            struct RenderRef {
                std::size_t group;
                FileRef ref;
            };
            std::vector<RenderRef> renders;
            for (std::size_t g = 0; g < method.render_groups.size(); ++g)
                for (const FileRef& ref : method.render_groups[g].images)
                    renders.push_back({g, ref});
            report.provenance.renders_total += renders.size();

            std::vector<GrayImage> render_images(renders.size());
            parallel_for(renders.size(), workers, [&](std::size_t i) {
                render_images[i] =
                    resize_bilinear(load_image(renders[i].ref.path), cfg.metric_resolution,
                                    cfg.metric_resolution);
            });

            // content distance of each render against its sketch
            std::vector<double> distances(renders.size());
            if (method.embeddings_file) {
                FeatureTable table = load_feature_csv(*method.embeddings_file);
                const std::string file = method.embeddings_file->string();
                std::vector<ContentEmbedding> group_sketch;
                for (const auto& group : method.render_groups)
                    group_sketch.push_back(table_embedding(table, group.sketch_id, file));
                for (std::size_t i = 0; i < renders.size(); ++i)
                    distances[i] = content_distance(
                        group_sketch[renders[i].group],
                        table_embedding(table, renders[i].ref.id, file));
            } else {
                std::vector<ContentEmbedding> render_emb(renders.size());
                parallel_for(renders.size(), workers, [&](std::size_t i) {
                    render_emb[i] =
                        proxy_content_encoding(render_images[i], renders[i].ref.id);
                });
                for (std::size_t i = 0; i < renders.size(); ++i) {
                    std::size_t si =
                        sketch_index.at(method.render_groups[renders[i].group].sketch_id);
                    distances[i] = content_distance(sketch_proxy[si], render_emb[i]);
                }
            }
            row_samples.content = distances;
            row.content = summarize(distances);

            // per-sketch content means, for the --per-sketch significance mode
            for (std::size_t g = 0; g < method.render_groups.size(); ++g) {
                double sum = 0.0;
                std::size_t count = 0;
                for (std::size_t i = 0; i < renders.size(); ++i)
                    if (renders[i].group == g) {
                        sum += distances[i];
                        ++count;
                    }
                if (count > 0) row_samples.per_sketch.push_back(sum / count);
            }

            // pooled FID against the real corpus
            if (renders.size() < 2) {
                row.warnings.push_back("fewer than 2 renders; FID skipped");
            } else if (method.features_file) {
                if (!m.real_features_file) {
                    row.warnings.push_back(
                        "method provides external render features but the manifest has no "
                        "real_features_file; FID skipped");
                } else {
                    FeatureTable table = load_feature_csv(*method.features_file);
                    FeatureMatrix gen;
                    gen.n = renders.size();
                    gen.d = table.matrix.d;
                    gen.source = FeatureSource::external_file;
                    for (const auto& r : renders) {
                        long idx = table.find(r.ref.id);
                        if (idx < 0)
                            throw input_error(method.features_file->string() +
                                              ": no feature row for render '" + r.ref.id + "'");
                        auto begin = table.matrix.values.begin() +
                                     idx * static_cast<long>(table.matrix.d);
                        gen.values.insert(gen.values.end(), begin,
                                          begin + static_cast<long>(table.matrix.d));
                    }
                    FidResult fr = fid(get_real_external(), gen, cfg.fid_eps);
                    row.fid = fr.value;
                    for (auto& w : fr.warnings) row.warnings.push_back(std::move(w));
                    any_external_fid = true;
                }
            } else if (m.real_images.size() < 2) {
                row.warnings.push_back("real corpus has fewer than 2 images; FID skipped");
            } else {
                FeatureMatrix gen = builtin_features(render_images, cfg.descriptor_dims, workers);
                FidResult fr = fid(get_real_builtin(), gen, cfg.fid_eps);
                row.fid = fr.value;
                for (auto& w : fr.warnings) row.warnings.push_back(std::move(w));
                any_builtin_fid = true;
            }

            // structural diversity per render group
            bool resized_any = false;
            for (std::size_t g = 0; g < method.render_groups.size(); ++g) {
                std::vector<GrayImage> group_images;
                for (std::size_t i = 0; i < renders.size(); ++i)
                    if (renders[i].group == g) group_images.push_back(render_images[i]);
                if (group_images.empty()) continue;
                RenderSet set = gather_render_set(method.render_groups[g].sketch_id,
                                                  std::move(group_images));
                resized_any = resized_any || set.resized;
                row_samples.diversity.push_back(
                    structural_diversity(set, cfg.ssim, workers).value);
            }
            if (resized_any)
                row.warnings.push_back("renders with mismatched dimensions were resized");
            if (!row_samples.diversity.empty())
                row.diversity = summarize(row_samples.diversity);
        } catch (const eval_error& e) {
            row.content.reset();
            row.fid.reset();
            row.diversity.reset();
            row_samples = {};
            row.warnings.push_back(std::string("method evaluation aborted: ") + e.what());
        }
        report.rows.push_back(std::move(row));
        samples.push_back(std::move(row_samples));
    }

    if (cfg.include_sketch_baseline && !m.sketches.empty()) {
        ReportRow row;
        row.method = kSketchBaselineRow;
        RowSamples row_samples;
        for (std::size_t i = 0; i < m.sketches.size(); ++i) {
            row_samples.content.push_back(
                content_distance(sketch_proxy[i], sketch_proxy[i]));
            row_samples.diversity.push_back(0.0);  // singleton render set
        }
        row_samples.per_sketch = row_samples.content;
        row.content = summarize(row_samples.content);
        row.diversity = summarize(row_samples.diversity);
        if (m.sketches.size() < 2) {
            row.warnings.push_back("fewer than 2 sketches; FID skipped");
        } else if (m.real_images.size() < 2) {
            row.warnings.push_back("real corpus has fewer than 2 images; FID skipped");
        } else {
            FeatureMatrix gen = builtin_features(sketch_images, cfg.descriptor_dims, workers);
            FidResult fr = fid(get_real_builtin(), gen, cfg.fid_eps);
            row.fid = fr.value;
            for (auto& w : fr.warnings) row.warnings.push_back(std::move(w));
            any_builtin_fid = true;
        }
        report.rows.push_back(std::move(row));
        samples.push_back(std::move(row_samples));
        report.provenance.notes.push_back(
            "sketch baseline compares each sketch to itself through the active encoder; "
            "its content distance is 0 by construction with the proxy encoder");
    }

    if (any_external_fid && any_builtin_fid)
        report.provenance.notes.push_back(
            "FID rows mix built-in descriptors and external features; values are "
            "comparable only within one feature source");

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        for (std::size_t j = i + 1; j < report.rows.size(); ++j) {
            const std::vector<double>& a = cfg.per_sketch_significance
                                               ? samples[i].per_sketch
                                               : samples[i].content;
            const std::vector<double>& b = cfg.per_sketch_significance
                                               ? samples[j].per_sketch
                                               : samples[j].content;
            if (a.size() >= 2 && b.size() >= 2)
                report.significance.push_back({"content", report.rows[i].method,
                                               report.rows[j].method,
                                               welch_t_test(a, b, cfg.alpha)});
            if (samples[i].diversity.size() >= 2 && samples[j].diversity.size() >= 2)
                report.significance.push_back(
                    {"diversity", report.rows[i].method, report.rows[j].method,
                     welch_t_test(samples[i].diversity, samples[j].diversity, cfg.alpha)});
        }
    }
    return report;
}

}  // namespace sketcheval
