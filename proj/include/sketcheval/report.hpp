#pragma once

#include <string>

#include "sketcheval/evaluate.hpp"

namespace sketcheval {

enum class ReportFormat { text, csv, json };

// text: aligned table (mean +/- std at 2 decimals, FID at 2 decimals) plus a
// significance block when entries exist; csv: method,content_mean,
// content_std,fid,diversity_mean,diversity_std; json: full report with
// provenance at full precision.
std::string render_report(const EvaluationReport& r, ReportFormat format);

ReportFormat parse_report_format(const std::string& name);

}  // namespace sketcheval
