#include "coh/runner.hpp"

#include "coh/ck.hpp"
#include "coh/hilbert.hpp"
#include "coh/schubert.hpp"
#include "coh/taut.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace coh {

const std::vector<std::string> kAllChecks = {
    "ck",  "dims", "fp",       "hilbert",        "hyp",
    "mck", "schubert", "taut-relations", "taut-sym"};

static CheckResult fp_entry(int g) {
    double t0 = now_ms();
    CheckResult r;
    r.check = "fp-vanishing";
    r.params = {{"g", std::to_string(g)}};
    CohClass fp = fp_class(g);
    if (!fp.isZero()) {
        r.status = Status::Fail;
        r.witness = to_string(fp);
    }
    r.wallMs = now_ms() - t0;
    return r;
}

static CheckResult taut_sym_entry(const SpaceSpec& sp, long termCap, int threads) {
    double t0 = now_ms();
    CheckResult r;
    r.check = "taut-symmetrized-sum";
    r.params = {{"g", std::to_string(sp.g)}};
    Integer terms = factorial(sp.oddRank + 2);
    r.detail = "terms=" + terms.get_str();
    if (terms > termCap) {
        r.status = Status::SkippedCap;
        r.detail += " exceeds cap " + std::to_string(termCap);
    } else {
        CohClass sum = symmetrized_tau_sum(sp, threads);
        if (!sum.isZero()) {
            r.status = Status::Fail;
            r.witness = to_string(sum);
        }
    }
    r.wallMs = now_ms() - t0;
    return r;
}

Report run_checks(const RunConfig& config) {
    if (config.gValues.empty())
        throw std::invalid_argument("at least one g value is required");
    for (int g : config.gValues)
        if (g < 1) throw std::invalid_argument("g values must be at least 1");
    if (config.mMax < 1) throw std::invalid_argument("m-max must be at least 1");
    if (config.termCap < 1) throw std::invalid_argument("term cap must be positive");

    std::set<std::string> checks = config.checks;
    if (checks.empty()) checks.insert(kAllChecks.begin(), kAllChecks.end());
    for (const std::string& c : checks)
        if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end())
            throw std::invalid_argument("unknown check: " + c);

    std::vector<int> gValues = config.gValues;
    std::sort(gValues.begin(), gValues.end());
    gValues.erase(std::unique(gValues.begin(), gValues.end()), gValues.end());
    const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();

    Report rep;
    for (const std::string& name : kAllChecks) {
        if (!checks.count(name)) continue;
        if (name == "ck") {
            for (int g : gValues) rep.merge(verify_ck(build_ck(g)));
        } else if (name == "dims") {
            for (int g : gValues) rep.merge(schubert::dimension_report(g));
        } else if (name == "fp") {
            for (int g : gValues)
                if (g >= 2) rep.add(fp_entry(g));
        } else if (name == "hilbert") {
            for (int g : gValues)
                for (int m = 1; m <= config.mMax; ++m)
                    rep.merge(injectivity_report(g, m, config.termCap, threads));
        } else if (name == "hyp") {
            for (int g : gValues) rep.merge(hyp_report(g));
        } else if (name == "mck") {
            for (int g : gValues) rep.merge(mck_full_check(build_ck(g), threads));
        } else if (name == "schubert") {
            rep.merge(schubert::fano_degree_check());
        } else if (name == "taut-relations") {
            for (int g : gValues)
                for (int m = 1; m <= config.mMax; ++m)
                    rep.merge(verify_relations(build_generators(g, m)));
        } else if (name == "taut-sym") {
            for (int g : gValues)
                rep.add(taut_sym_entry(make_space(SpaceKind::YType, g),
                                       config.termCap, threads));
        }
    }
    rep.sortCanonical();
    return rep;
}

}  // namespace coh
