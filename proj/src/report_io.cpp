#include "pcms/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace pcms {

using nlohmann::json;

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // fold negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

json report_to_json(const AxiomReport& report, double elapsed_ms) {
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
        json w;
        if (c.witness) w = *c.witness; else w = nullptr;
        double margin = c.margin == 0.0 ? 0.0 : c.margin;  // fold negative zero
        checks.push_back(json{{"axiom_id", c.axiom_id},
                              {"margin", margin},
                              {"status", to_string(c.status)},
                              {"witness", w}});
    }
    return json{{"checks", checks},
                {"elapsed_ms", elapsed_ms},
                {"suite", report.suite},
                {"summary", {{"degenerate", report.count(CheckStatus::Degenerate)},
                             {"fail", report.count(CheckStatus::Fail)},
                             {"pass", report.count(CheckStatus::Pass)}}}};
}

std::string emit_report(const AxiomReport& report, double elapsed_ms, ReportFormat format) {
    if (format == ReportFormat::Json) return report_to_json(report, elapsed_ms).dump();

    std::ostringstream out;
    out << "suite: " << report.suite << "\n";
    for (const CheckResult& c : report.checks) {
        const char* tag = c.status == CheckStatus::Pass ? "PASS"
                          : c.status == CheckStatus::Fail ? "FAIL" : "DGEN";
        out << "[" << tag << "] " << c.axiom_id;
        if (c.witness) {
            out << " witness=(";
            for (std::size_t i = 0; i < c.witness->size(); ++i) {
                if (i) out << ", ";
                out << num((*c.witness)[i]);
            }
            out << ")";
        }
        out << " margin=" << num(c.margin) << "\n";
    }
    out << "summary: pass=" << report.count(CheckStatus::Pass)
        << " fail=" << report.count(CheckStatus::Fail)
        << " degenerate=" << report.count(CheckStatus::Degenerate)
        << " elapsed_ms=" << num(elapsed_ms) << "\n";
    return out.str();
}

}  // namespace pcms
