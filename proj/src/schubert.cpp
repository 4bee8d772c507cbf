#include "coh/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coh {
namespace schubert {

static std::vector<int> trimmed(std::vector<int> p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
    for (int v : p)
        if (v < 0) throw std::invalid_argument("parts must be nonnegative");
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Partition::Partition(std::initializer_list<int> p)
    : parts(trimmed(std::vector<int>(p))) {}
Partition::Partition(std::vector<int> p) : parts(trimmed(std::move(p))) {}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::part(int i) const {
    return i < length() ? parts[i] : 0;
}

bool Partition::fitsBox(int rows, int cols) const {
    return length() <= rows && (parts.empty() || parts[0] <= cols);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

void SchubertClass::addTerm(const Partition& p, const Rational& c) {
    if (!p.fitsBox(gr_.k, gr_.boxCols()))
        throw std::invalid_argument("partition does not fit the box");
    if (is_zero(c)) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

SchubertClass unit(Grassmannian gr) {
    SchubertClass a(gr);
    a.addTerm(Partition{}, rat(1));
    return a;
}

SchubertClass sigma(Grassmannian gr, Partition p) {
    SchubertClass a(gr);
    a.addTerm(p, rat(1));
    return a;
}

// Partitions nu in the box with nu/lambda a horizontal strip of size r.
static void pieri_targets(const Partition& lambda, int r, int rows, int cols,
                          std::vector<Partition>& out) {
    // nu_i ranges over [max(lambda_i, nu_{i+1}), min(lambda_{i-1}, cols)]
    // with total size |lambda| + r; build from the bottom row up.
    std::vector<int> chosen(rows, 0);
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row < 0) {
            if (remaining == 0) {
                std::vector<int> parts(chosen.begin(), chosen.end());
                out.emplace_back(parts);
            }
            return;
        }
        int lo = std::max(lambda.part(row), row + 1 < rows ? chosen[row + 1] : 0);
        int hi = std::min(row > 0 ? lambda.part(row - 1) : cols, cols);
        for (int v = lo; v <= hi; ++v) {
            int add = v - lambda.part(row);
            if (add > remaining) break;
            chosen[row] = v;
            self(self, row - 1, remaining - add);
        }
        chosen[row] = lambda.part(row);
    };
    for (int i = 0; i < rows; ++i) chosen[i] = lambda.part(i);
    rec(rec, rows - 1, r);
}

SchubertClass pieri(const SchubertClass& a, int r) {
    const Grassmannian gr = a.space();
    if (r < 0 || r > gr.boxCols())
        throw std::invalid_argument("special class index out of range");
    if (r == 0) return a;
    SchubertClass out(gr);
    std::vector<Partition> targets;
    for (const auto& [lambda, c] : a.terms()) {
        targets.clear();
        pieri_targets(lambda, r, gr.k, gr.boxCols(), targets);
        for (const Partition& nu : targets) out.addTerm(nu, c);
    }
    return out;
}

// Jacobi-Trudi: sigma_lambda = det(sigma_{lambda_i + j - i}), expanded over
// permutations; entries beyond the box column bound vanish.
static SchubertClass mult_by_sigma(const SchubertClass& a, const Partition& lambda) {
    const Grassmannian gr = a.space();
    const int l = lambda.length();
    if (l == 0) return a;
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    SchubertClass out(gr);
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inversions;
        bool dead = false;
        std::vector<int> rows;
        for (int i = 0; i < l && !dead; ++i) {
            int entry = lambda.part(i) + perm[i] - i;
            if (entry < 0 || entry > gr.boxCols()) dead = true;
            else rows.push_back(entry);
        }
        if (dead) continue;
        SchubertClass term = a;
        for (int rPow : rows) term = pieri(term, rPow);
        for (const auto& [p, c] : term.terms())
            out.addTerm(p, (inversions % 2 ? -c : c));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SchubertClass mult(const SchubertClass& a, const SchubertClass& b) {
    if (!(a.space() == b.space())) throw std::invalid_argument("grassmannian mismatch");
    SchubertClass out(a.space());
    for (const auto& [lambda, c] : b.terms()) {
        SchubertClass term = mult_by_sigma(a, lambda);
        for (const auto& [p, v] : term.terms()) out.addTerm(p, c * v);
    }
    return out;
}

Rational integrate_top(const SchubertClass& a) {
    const Grassmannian gr = a.space();
    Partition full(std::vector<int>(gr.k, gr.boxCols()));
    auto it = a.terms().find(full);
    return it == a.terms().end() ? Rational(0) : it->second;
}

Rational fano_surface_c2_degree() {
    Grassmannian gr{2, 6};
    SchubertClass s21 = sigma(gr, {2, 1});
    SchubertClass square = mult(s21, s21);
    SchubertClass fano(gr);
    for (const auto& [p, c] : square.terms()) fano.addTerm(p, rat(16) * c);
    return integrate_top(pieri(fano, 2));
}

Report fano_degree_check() {
    Report rep;
    double t0 = now_ms();
    CheckResult r;
    r.check = "schubert-fano-degree";
    Rational deg = fano_surface_c2_degree();
    r.detail = "deg=" + rat_string(deg);
    if (!(deg == rat(16))) r.status = Status::Fail;
    r.wallMs = now_ms() - t0;
    rep.add(std::move(r));
    return rep;
}

DimensionCounts dimension_counts(int g) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    DimensionCounts d{};
    d.g = g;
    Integer dimQuadrics = binomial(2 * g + 3, 2);
    d.r = static_cast<int>(2 * dimQuadrics.get_si() - 1);
    d.rankE = static_cast<int>(2 * binomial(g + 1, 2).get_si());
    d.s = d.r - d.rankE;
    d.fiberY = d.r - 2;
    d.fiberYYOff = d.r - 4;
    d.fiberYYOn = d.r - 2;
    if (g == 2) {
        d.fiberFYOff = d.r - 8;
        d.fiberFYOn = d.r - 6;
    } else {
        d.fiberFYOff = d.fiberFYOn = -1;
    }
    return d;
}

Report dimension_report(int g) {
    Report rep;
    double t0 = now_ms();
    CheckResult r;
    r.check = "dimension-counts";
    r.params = {{"g", std::to_string(g)}};
    DimensionCounts d = dimension_counts(g);
    std::ostringstream os;
    os << "r=" << d.r << " rankE=" << d.rankE << " s=" << d.s
       << " fiberY=" << d.fiberY << " fiberYY=" << d.fiberYYOn << "/"
       << d.fiberYYOff;
    bool ok = d.s >= 0 && d.fiberYYOff >= 0 && d.fiberYYOn - d.fiberYYOff == 2;
    if (g == 2) {
        os << " fiberFY=" << d.fiberFYOn << "/" << d.fiberFYOff;
        ok = ok && d.fiberFYOff >= 0 && d.fiberFYOn - d.fiberFYOff == 2 &&
             d.fiberFYOn == d.fiberY - 4 && d.fiberFYOff == d.fiberY - 6;
    }
    r.detail = os.str();
    if (!ok) r.status = Status::Fail;
    r.wallMs = now_ms() - t0;
    rep.add(std::move(r));
    return rep;
}

}  // namespace schubert
}  // namespace coh
