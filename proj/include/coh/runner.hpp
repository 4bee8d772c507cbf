#pragma once

#include "coh/report.hpp"

#include <set>
#include <string>
#include <vector>

namespace coh {

struct RunConfig {
    std::vector<int> gValues{1, 2};
    int mMax = 2;
    std::set<std::string> checks;  // empty selects every check
    enum class Format { Text, Json } format = Format::Text;
    long termCap = 1'000'000;
    bool strictCaps = false;
    int threads = 0;  // 0 = all available workers
};

extern const std::vector<std::string> kAllChecks;

// Runs the selected checks over the selected parameters. Entries come back
// in canonical order and carry no timing in their JSON rendering, so reports
// are byte-identical across runs and across worker counts.
// Throws std::invalid_argument on malformed configuration.
Report run_checks(const RunConfig& config);

}  // namespace coh
