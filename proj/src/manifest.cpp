#include "sketcheval/manifest.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "sketcheval/errors.hpp"

namespace sketcheval {

namespace {

using nlohmann::json;

const json& require(const json& node, const char* key, const std::string& pointer,
                    json::value_t type) {
    auto it = node.find(key);
    if (it == node.end())
        throw format_error("manifest: " + pointer + "/" + key + ": required field missing");
    if (it->type() != type &&
        !(type == json::value_t::string && it->is_string()))
        throw format_error("manifest: " + pointer + "/" + key + ": wrong type");
    return *it;
}

std::string require_string(const json& node, const char* key, const std::string& pointer) {
    auto it = node.find(key);
    if (it == node.end())
        throw format_error("manifest: " + pointer + "/" + key + ": required field missing");
    if (!it->is_string())
        throw format_error("manifest: " + pointer + "/" + key + ": expected a string");
    return it->get<std::string>();
}

}  // namespace

Manifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open manifest: " + path.string());

    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw format_error("manifest: " + path.string() + ": " + e.what());
    }
    if (!root.is_object()) throw format_error("manifest: /: expected a JSON object");

    Manifest m;
    m.base_dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp : m.base_dir / fp;
    };

    const json& real = require(root, "real_images", "", json::value_t::array);
    for (std::size_t i = 0; i < real.size(); ++i) {
        if (!real[i].is_string())
            throw format_error("manifest: /real_images/" + std::to_string(i) +
                               ": expected a string path");
        std::string p = real[i].get<std::string>();
        m.real_images.push_back({p, resolve(p)});
    }

    const json& sketches = require(root, "sketches", "", json::value_t::array);
    std::unordered_set<std::string> sketch_ids;
    for (std::size_t i = 0; i < sketches.size(); ++i) {
        std::string pointer = "/sketches/" + std::to_string(i);
        if (!sketches[i].is_object())
            throw format_error("manifest: " + pointer + ": expected an object");
        std::string id = require_string(sketches[i], "id", pointer);
        std::string image = require_string(sketches[i], "image", pointer);
        if (!sketch_ids.insert(id).second)
            throw format_error("manifest: " + pointer + ": duplicate sketch id '" + id + "'");
        m.sketches.push_back({id, resolve(image)});
    }

    const json& methods = require(root, "methods", "", json::value_t::array);
    std::unordered_set<std::string> method_names;
    for (std::size_t i = 0; i < methods.size(); ++i) {
        std::string pointer = "/methods/" + std::to_string(i);
        if (!methods[i].is_object())
            throw format_error("manifest: " + pointer + ": expected an object");
        MethodEntry method;
        method.name = require_string(methods[i], "name", pointer);
        if (!method_names.insert(method.name).second)
            throw format_error("manifest: " + pointer + ": duplicate method name '" +
                               method.name + "'");

        const json& groups = require(methods[i], "render_groups", pointer, json::value_t::array);
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            std::string gp = pointer + "/render_groups/" + std::to_string(gi);
            if (!groups[gi].is_object())
                throw format_error("manifest: " + gp + ": expected an object");
            RenderGroup group;
            group.sketch_id = require_string(groups[gi], "sketch_id", gp);
            if (!sketch_ids.count(group.sketch_id))
                throw format_error("manifest: " + gp + ": render group references unknown sketch id '" +
                                   group.sketch_id + "'");
            const json& images = require(groups[gi], "images", gp, json::value_t::array);
            for (std::size_t ii = 0; ii < images.size(); ++ii) {
                if (!images[ii].is_string())
                    throw format_error("manifest: " + gp + "/images/" + std::to_string(ii) +
                                       ": expected a string path");
                std::string p = images[ii].get<std::string>();
                group.images.push_back({p, resolve(p)});
            }
            method.render_groups.push_back(std::move(group));
        }
        if (methods[i].contains("embeddings_file"))
            method.embeddings_file = resolve(require_string(methods[i], "embeddings_file", pointer));
        if (methods[i].contains("features_file"))
            method.features_file = resolve(require_string(methods[i], "features_file", pointer));
        m.methods.push_back(std::move(method));
    }

    if (root.contains("real_features_file"))
        m.real_features_file = resolve(require_string(root, "real_features_file", ""));

    std::vector<std::string> missing;
    auto check = [&](const std::filesystem::path& p) {
        if (!std::filesystem::exists(p)) missing.push_back(p.string());
    };
    for (const auto& ref : m.real_images) check(ref.path);
    for (const auto& ref : m.sketches) check(ref.path);
    for (const auto& method : m.methods) {
        for (const auto& group : method.render_groups)
            for (const auto& ref : group.images) check(ref.path);
        if (method.embeddings_file) check(*method.embeddings_file);
        if (method.features_file) check(*method.features_file);
    }
    if (m.real_features_file) check(*m.real_features_file);
    if (!missing.empty()) {
        std::string msg = "manifest references missing files:";
        for (const auto& p : missing) msg += "\n  " + p;
        throw input_error(msg);
    }
    return m;
}

}  // namespace sketcheval
