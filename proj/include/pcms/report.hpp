#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcms {

enum class CheckStatus { Pass, Fail, Degenerate };

const char* to_string(CheckStatus s);

// A witness is the flat numeric tuple that produced a check outcome
// (vectors are flattened component-wise). Tuples are totally ordered
// lexicographically, which is what makes parallel reductions reproducible.
using Witness = std::vector<double>;

struct CheckResult {
    std::string axiom_id;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Witness> witness;
    double margin = 0.0;  // signed slack: negative means the check was violated by that much
};

struct AxiomReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::size_t count(CheckStatus s) const;
    const CheckResult* find(std::string_view axiom_id) const;
    void append(const AxiomReport& other);

    CheckResult& add(std::string axiom_id, CheckStatus status, double margin,
                     std::optional<Witness> witness = std::nullopt);
};

}  // namespace pcms
