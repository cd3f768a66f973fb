#include "sketcheval/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sketcheval/errors.hpp"

namespace sketcheval {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string summary_cell(const std::optional<MetricSummary>& s) {
    if (!s) return "n/a";
    return format_fixed(s->mean, 2) + " ± " + format_fixed(s->std, 2);
}

std::string fid_cell(const std::optional<double>& v) {
    return v ? format_fixed(*v, 2) : "n/a";
}

// column widths are computed over codepoints, close enough for the +/- and
// arrow glyphs used here
std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

std::string pad(const std::string& s, std::size_t width) {
    std::string out = s;
    for (std::size_t i = display_width(s); i < width; ++i) out += ' ';
    return out;
}

std::string render_text(const EvaluationReport& r) {
    const std::vector<std::string> headers = {"Method", "Content Distance ↓",
                                              "FID ↓", "Structural Diversity ↑"};
    std::vector<std::vector<std::string>> cells;
    for (const ReportRow& row : r.rows)
        cells.push_back({row.method, summary_cell(row.content), fid_cell(row.fid),
                         summary_cell(row.diversity)});

    std::vector<std::size_t> widths;
    for (std::size_t c = 0; c < headers.size(); ++c) {
        std::size_t w = display_width(headers[c]);
        for (const auto& row : cells) w = std::max(w, display_width(row[c]));
        widths.push_back(w);
    }

    std::ostringstream out;
    for (std::size_t c = 0; c < headers.size(); ++c)
        out << (c ? " | " : "") << pad(headers[c], widths[c]);
    out << "\n";
    for (std::size_t c = 0; c < headers.size(); ++c) {
        if (c) out << "-+-";
        out << std::string(widths[c], '-');
    }
    out << "\n";
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < headers.size(); ++c)
            out << (c ? " | " : "") << pad(row[c], widths[c]);
        out << "\n";
    }

    if (!r.significance.empty()) {
        out << "\nSignificance (Welch t-test, alpha = "
            << format_compact(r.provenance.config.alpha) << ")\n";
        for (const SignificanceEntry& e : r.significance) {
            out << "  " << pad(e.metric, 9) << " " << e.method_a << " vs " << e.method_b
                << ": t = " << format_fixed(e.test.t, 3)
                << ", df = " << format_fixed(e.test.df, 1)
                << ", p = " << format_fixed(e.test.p, 4)
                << (e.test.significant ? "  significant" : "") << "\n";
        }
    }

    bool any_warning = false;
    for (const ReportRow& row : r.rows) any_warning = any_warning || !row.warnings.empty();
    if (any_warning) {
        out << "\nWarnings\n";
        for (const ReportRow& row : r.rows)
            for (const std::string& w : row.warnings)
                out << "  " << row.method << ": " << w << "\n";
    }
    if (!r.provenance.notes.empty()) {
        out << "\nNotes\n";
        for (const std::string& n : r.provenance.notes) out << "  " << n << "\n";
    }
    return out.str();
}

std::string render_csv(const EvaluationReport& r) {
    std::ostringstream out;
    out << "method,content_mean,content_std,fid,diversity_mean,diversity_std\n";
    for (const ReportRow& row : r.rows) {
        out << row.method << ",";
        if (row.content) out << format_full(row.content->mean) << "," << format_full(row.content->std);
        else out << ",";
        out << ",";
        if (row.fid) out << format_full(*row.fid);
        out << ",";
        if (row.diversity)
            out << format_full(row.diversity->mean) << "," << format_full(row.diversity->std);
        else out << ",";
        out << "\n";
    }
    return out.str();
}

ordered_json summary_json(const std::optional<MetricSummary>& s) {
    if (!s) return nullptr;
    return ordered_json{{"mean", s->mean}, {"std", s->std}, {"n", s->n}};
}

ordered_json config_json(const EvaluationConfig& cfg) {
    return ordered_json{
        {"alpha", cfg.alpha},
        {"fid_eps", cfg.fid_eps},
        {"ssim",
         ordered_json{{"window_size", cfg.ssim.window_size},
                      {"window_sigma", cfg.ssim.window_sigma},
                      {"k1", cfg.ssim.k1},
                      {"k2", cfg.ssim.k2},
                      {"dynamic_range", cfg.ssim.dynamic_range}}},
        {"descriptor_dims", cfg.descriptor_dims},
        {"metric_resolution", cfg.metric_resolution},
        {"include_sketch_baseline", cfg.include_sketch_baseline},
        {"per_sketch_significance", cfg.per_sketch_significance}};
}

std::string render_json(const EvaluationReport& r) {
    ordered_json rows = ordered_json::array();
    for (const ReportRow& row : r.rows) {
        rows.push_back(ordered_json{{"method", row.method},
                                    {"content", summary_json(row.content)},
                                    {"fid", row.fid ? ordered_json(*row.fid) : nullptr},
                                    {"diversity", summary_json(row.diversity)},
                                    {"warnings", row.warnings}});
    }
    ordered_json significance = ordered_json::array();
    for (const SignificanceEntry& e : r.significance) {
        significance.push_back(ordered_json{{"metric", e.metric},
                                            {"method_a", e.method_a},
                                            {"method_b", e.method_b},
                                            {"t", e.test.t},
                                            {"df", e.test.df},
                                            {"p", e.test.p},
                                            {"significant", e.test.significant}});
    }
    ordered_json doc{
        {"rows", rows},
        {"significance", significance},
        {"provenance",
         ordered_json{{"tool_version", r.provenance.tool_version},
                      {"config", config_json(r.provenance.config)},
                      {"corpus",
                       ordered_json{{"real_images", r.provenance.real_images},
                                    {"sketches", r.provenance.sketches},
                                    {"methods", r.provenance.methods},
                                    {"renders_total", r.provenance.renders_total}}},
                      {"notes", r.provenance.notes}}}};
    return doc.dump(2) + "\n";
}

}  // namespace

std::string render_report(const EvaluationReport& r, ReportFormat format) {
    switch (format) {
        case ReportFormat::text: return render_text(r);
        case ReportFormat::csv: return render_csv(r);
        case ReportFormat::json: return render_json(r);
    }
    throw argument_error("render_report: unknown format");
}

ReportFormat parse_report_format(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw argument_error("unknown report format '" + name + "' (expected text, csv, or json)");
}

}  // namespace sketcheval
