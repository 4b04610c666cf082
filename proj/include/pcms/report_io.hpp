#pragma once

// Report serialization. The JSON layout is a stable contract:
// {"checks": [{"axiom_id", "margin", "status", "witness"}], "elapsed_ms",
//  "suite", "summary": {"degenerate", "fail", "pass"}} with keys sorted;
// identical inputs serialize to identical bytes apart from elapsed_ms.

#include <string>

#include "json.hpp"
#include "pcms/report.hpp"

namespace pcms {

enum class ReportFormat { Json, Text };

nlohmann::json report_to_json(const AxiomReport& report, double elapsed_ms);

std::string emit_report(const AxiomReport& report, double elapsed_ms, ReportFormat format);

}  // namespace pcms
