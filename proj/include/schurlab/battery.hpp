#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schurlab/report_json.hpp"

namespace schurlab {

enum class Scale { smoke, desk };

/// `smoke` trims sample counts for a quick run; `desk` uses the full
/// acceptance sizes.
Scale parse_scale(const std::string& text);
std::string to_string(Scale scale);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    std::string detail;
    double seconds = 0.0;       // wall time, not part of the JSON
    double budget_seconds = 0;  // enforced at desk scale only
};

inline constexpr int kCriterionCount = 9;

/// One acceptance criterion (1..9). Every randomized input is drawn from
/// a generator seeded by (seed, id).
CriterionResult run_criterion(int id, Scale scale, std::uint64_t seed);

std::vector<CriterionResult> run_battery(Scale scale, std::uint64_t seed);

/// "PASS  3 universal_expansion  50 cases  exact agreement (1.20 s)"
std::string format_line(const CriterionResult& r);

/// Deterministic summary: no timings.
Json to_json(const std::vector<CriterionResult>& results, Scale scale, std::uint64_t seed);

}  // namespace schurlab
