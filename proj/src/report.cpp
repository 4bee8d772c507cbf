#include "coh/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace coh {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::SkippedCap: return "skipped-cap";
    }
    return "?";
}

void Report::merge(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool Report::anyFail() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const CheckResult& r) { return r.status == Status::Fail; });
}

bool Report::anySkipped() const {
    return std::any_of(entries.begin(), entries.end(), [](const CheckResult& r) {
        return r.status == Status::SkippedCap;
    });
}

void Report::sortCanonical() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         if (a.check != b.check) return a.check < b.check;
                         return a.params < b.params;
                     });
}

static std::string params_string(const CheckResult& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) os << " ";
        os << r.params[i].first << "=" << r.params[i].second;
    }
    return os.str();
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    int pass = 0, fail = 0, skip = 0;
    for (const auto& e : r.entries) {
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.1fms", e.wallMs);
        os << "[" << status_name(e.status) << "] " << e.check;
        std::string p = params_string(e);
        if (!p.empty()) os << " (" << p << ")";
        if (!e.detail.empty()) os << ": " << e.detail;
        os << " [" << timing << "]\n";
        if (!e.witness.empty()) os << "    witness: " << e.witness << "\n";
        switch (e.status) {
            case Status::Pass: ++pass; break;
            case Status::Fail: ++fail; break;
            case Status::SkippedCap: ++skip; break;
        }
    }
    os << "summary: " << pass << " passed, " << fail << " failed, " << skip
       << " skipped\n";
    return os.str();
}

std::string report_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["entries"] = nlohmann::ordered_json::array();
    int pass = 0, fail = 0, skip = 0;
    for (const auto& e : r.entries) {
        nlohmann::ordered_json je;
        je["check"] = e.check;
        nlohmann::ordered_json jp = nlohmann::ordered_json::object();
        for (const auto& [k, v] : e.params) jp[k] = v;
        je["params"] = jp;
        je["status"] = status_name(e.status);
        je["detail"] = e.detail;
        if (!e.witness.empty()) je["witness"] = e.witness;
        doc["entries"].push_back(je);
        switch (e.status) {
            case Status::Pass: ++pass; break;
            case Status::Fail: ++fail; break;
            case Status::SkippedCap: ++skip; break;
        }
    }
    doc["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skip}};
    return doc.dump(2) + "\n";
}

int report_exit_code(const Report& r, bool strictCaps) {
    if (r.anyFail()) return 1;
    if (r.anySkipped()) return strictCaps ? 1 : 2;
    return 0;
}

}  // namespace coh
