#include <fstream>

#include <json.hpp>

#include "sketcheval/errors.hpp"
#include "sketcheval/evaluate.hpp"

namespace sketcheval {

namespace {

using nlohmann::json;

template <typename T>
void read_field(const json& node, const char* key, T& out) {
    if (node.contains(key)) out = node.at(key).get<T>();
}

}  // namespace

EvaluationConfig load_evaluation_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config: " + path.string());

    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw format_error("config: " + path.string() + ": " + e.what());
    }
    if (!root.is_object()) throw format_error("config: expected a JSON object");

    static const std::vector<std::string> known = {
        "alpha",           "fid_eps",
        "ssim",            "descriptor_dims",
        "metric_resolution", "include_sketch_baseline",
        "per_sketch_significance"};
    for (const auto& [key, value] : root.items()) {
        (void)value;
        bool ok = false;
        for (const auto& k : known) ok = ok || k == key;
        if (!ok) throw format_error("config: unknown field '" + key + "'");
    }

    EvaluationConfig cfg;
    try {
        read_field(root, "alpha", cfg.alpha);
        read_field(root, "fid_eps", cfg.fid_eps);
        read_field(root, "descriptor_dims", cfg.descriptor_dims);
        read_field(root, "metric_resolution", cfg.metric_resolution);
        read_field(root, "include_sketch_baseline", cfg.include_sketch_baseline);
        read_field(root, "per_sketch_significance", cfg.per_sketch_significance);
        if (root.contains("ssim")) {
            const json& s = root.at("ssim");
            static const std::vector<std::string> ssim_known = {
                "window_size", "window_sigma", "k1", "k2", "dynamic_range"};
            for (const auto& [key, value] : s.items()) {
                (void)value;
                bool ok = false;
                for (const auto& k : ssim_known) ok = ok || k == key;
                if (!ok) throw format_error("config: unknown field 'ssim." + key + "'");
            }
            read_field(s, "window_size", cfg.ssim.window_size);
            read_field(s, "window_sigma", cfg.ssim.window_sigma);
            read_field(s, "k1", cfg.ssim.k1);
            read_field(s, "k2", cfg.ssim.k2);
            read_field(s, "dynamic_range", cfg.ssim.dynamic_range);
        }
    } catch (const json::exception& e) {
        throw format_error("config: " + path.string() + ": " + e.what());
    }
    return cfg;
}

}  // namespace sketcheval
