#include "pcms/report.hpp"

#include <algorithm>

namespace pcms {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Degenerate: return "degenerate";
    }
    return "unknown";
}

bool AxiomReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::size_t AxiomReport::count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [s](const CheckResult& c) { return c.status == s; }));
}

const CheckResult* AxiomReport::find(std::string_view axiom_id) const {
    for (const auto& c : checks)
        if (c.axiom_id == axiom_id) return &c;
    return nullptr;
}

void AxiomReport::append(const AxiomReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

CheckResult& AxiomReport::add(std::string axiom_id, CheckStatus status, double margin,
                              std::optional<Witness> witness) {
    checks.push_back(CheckResult{std::move(axiom_id), status, std::move(witness), margin});
    return checks.back();
}

}  // namespace pcms
