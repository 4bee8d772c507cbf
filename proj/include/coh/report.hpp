#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coh {

enum class Status { Pass, Fail, SkippedCap };

std::string status_name(Status s);

// One verification outcome. `detail` is a deterministic summary; `witness`
// carries a canonically serialized class on failure. Wall time appears in
// the text rendering only, so JSON reports stay byte-identical across runs.
struct CheckResult {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    Status status = Status::Pass;
    std::string detail;
    std::string witness;
    double wallMs = 0.0;
};

struct Report {
    std::vector<CheckResult> entries;

    void add(CheckResult r) { entries.push_back(std::move(r)); }
    void merge(const Report& other);
    bool anyFail() const;
    bool anySkipped() const;
    bool allPass() const { return !anyFail() && !anySkipped(); }
    // Stable order: check name, then parameters lexicographically.
    void sortCanonical();
};

std::string report_text(const Report& r);
std::string report_json(const Report& r);

// 0 all pass; 1 any failure (or any skip under strictCaps); 2 skips only.
int report_exit_code(const Report& r, bool strictCaps);

// Thrown when a combinatorial guard (term cap) would be exceeded.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

}  // namespace coh
