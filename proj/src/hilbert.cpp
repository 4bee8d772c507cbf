#include "coh/hilbert.hpp"

#include "coh/linalg.hpp"
#include "coh/taut.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coh {

namespace {

using Monomial = std::vector<int>;  // exponents over the generator list

// Generators are listed h_1..h_m, o_1..o_m, tau_ij (i<j lexicographic).
struct GeneratorModel {
    SpaceSpec sp;
    int m;
    std::vector<int> degree;
    std::vector<CohClass> value;
    std::vector<std::pair<int, int>> tauPairs;

    int count() const { return static_cast<int>(degree.size()); }
    int hIndex(int i) const { return i; }
    int oIndex(int i) const { return m + i; }
    int tauIndex(int i, int j) const {
        if (i > j) std::swap(i, j);
        for (std::size_t k = 0; k < tauPairs.size(); ++k)
            if (tauPairs[k] == std::make_pair(i, j))
                return 2 * m + static_cast<int>(k);
        throw std::invalid_argument("tau index");
    }
};

GeneratorModel build_model(int g, int m) {
    TautGenerators gens = build_generators(g, m);
    GeneratorModel model{gens.space, m, {}, {}, {}};
    const int genDeg = 2 * gens.space.topPower;
    for (int i = 0; i < m; ++i) {
        model.degree.push_back(2);
        model.value.push_back(gens.h[i]);
    }
    for (int i = 0; i < m; ++i) {
        model.degree.push_back(genDeg);
        model.value.push_back(gens.o[i]);
    }
    for (const auto& [ij, t] : gens.tau) {
        model.degree.push_back(genDeg);
        model.value.push_back(t);
        model.tauPairs.push_back(ij);
    }
    return model;
}

void enumerate_rec(const GeneratorModel& model, int gen, int remaining,
                   Monomial& current, std::vector<Monomial>& out, long cap) {
    if (remaining == 0) {
        out.push_back(current);
        if (static_cast<long>(out.size()) > cap)
            throw CapExceeded("monomial count exceeds term cap");
        return;
    }
    if (gen == model.count()) return;
    int d = model.degree[gen];
    for (int e = 0; e * d <= remaining; ++e) {
        current[gen] = e;
        enumerate_rec(model, gen + 1, remaining - e * d, current, out, cap);
    }
    current[gen] = 0;
}

std::vector<Monomial> monomials_of_degree(const GeneratorModel& model, int d,
                                          long cap) {
    std::vector<Monomial> out;
    Monomial current(model.count(), 0);
    enumerate_rec(model, 0, d, current, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

CohClass evaluate(const GeneratorModel& model, const Monomial& mono) {
    CohClass r = unit_class(model.sp, model.m);
    for (int gen = 0; gen < model.count(); ++gen)
        for (int e = 0; e < mono[gen]; ++e) r = mul(r, model.value[gen]);
    return r;
}

// A relation as a signed combination of monomials, homogeneous by degree.
struct Relation {
    std::vector<std::pair<Monomial, Rational>> terms;
    int degree;
};

Relation make_relation(const GeneratorModel& model,
                       std::vector<std::pair<Monomial, Rational>> terms) {
    Relation r{std::move(terms), 0};
    const Monomial& first = r.terms.front().first;
    r.degree = std::inner_product(first.begin(), first.end(),
                                  model.degree.begin(), 0);
    return r;
}

Monomial single(const GeneratorModel& model, std::initializer_list<std::pair<int, int>> exps) {
    Monomial mono(model.count(), 0);
    for (const auto& [idx, e] : exps) mono[idx] += e;
    return mono;
}

std::vector<Relation> build_relations(const GeneratorModel& model,
                                      const PresentationOptions& opts) {
    std::vector<Relation> rels;
    const int m = model.m;
    const SpaceSpec& sp = model.sp;
    const Rational t = sp.topIntegral;
    const Rational b = rat(sp.oddRank);
    for (int i = 0; i < m; ++i) {
        rels.push_back(make_relation(
            model, {{single(model, {{model.oIndex(i), 2}}), rat(1)}}));
        rels.push_back(make_relation(
            model,
            {{single(model, {{model.hIndex(i), 1}, {model.oIndex(i), 1}}), rat(1)}}));
        rels.push_back(make_relation(
            model, {{single(model, {{model.hIndex(i), sp.topPower}}), rat(1)},
                    {single(model, {{model.oIndex(i), 1}}), -t}}));
    }
    for (std::size_t k = 0; k < model.tauPairs.size(); ++k) {
        auto [i, j] = model.tauPairs[k];
        int ti = 2 * m + static_cast<int>(k);
        for (int end : {i, j}) {
            rels.push_back(make_relation(
                model,
                {{single(model, {{ti, 1}, {model.oIndex(end), 1}}), rat(1)}}));
            rels.push_back(make_relation(
                model,
                {{single(model, {{ti, 1}, {model.hIndex(end), 1}}), rat(1)}}));
        }
        rels.push_back(make_relation(
            model,
            {{single(model, {{ti, 2}}), rat(1)},
             {single(model, {{model.oIndex(i), 1}, {model.oIndex(j), 1}}), b}}));
    }
    if (opts.tripleRelation) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    if (i == j || i == k) continue;
                    rels.push_back(make_relation(
                        model,
                        {{single(model, {{model.tauIndex(i, j), 1},
                                         {model.tauIndex(i, k), 1}}),
                          rat(1)},
                         {single(model, {{model.tauIndex(j, k), 1},
                                         {model.oIndex(i), 1}}),
                          -rat(1)}}));
                }
    }
    if (opts.symmetrizedSum && m >= sp.oddRank + 2) {
        const int w = sp.oddRank + 2;
        // one symmetrized relation per w-subset of the factors
        std::vector<int> subset(w);
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            std::map<Monomial, Rational> acc;
            std::vector<int> perm(w);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                Monomial mono(model.count(), 0);
                for (int p = 0; p < w; p += 2)
                    mono[model.tauIndex(subset[perm[p]], subset[perm[p + 1]])] += 1;
                acc[mono] += 1;
            } while (std::next_permutation(perm.begin(), perm.end()));
            std::vector<std::pair<Monomial, Rational>> terms(acc.begin(), acc.end());
            rels.push_back(make_relation(model, std::move(terms)));
            // next subset in lexicographic order
            int i = w - 1;
            while (i >= 0 && subset[i] == m - w + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < w; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return rels;
}

long image_rank_at(const GeneratorModel& model, int d, long cap) {
    std::vector<Monomial> monos = monomials_of_degree(model, d, cap);
    std::map<Word, int> columns;
    std::vector<SparseRow> rows;
    rows.reserve(monos.size());
    for (const Monomial& mono : monos) {
        CohClass value = evaluate(model, mono);
        SparseRow row;
        row.reserve(value.termCount());
        for (const auto& [w, c] : value.terms()) {
            auto [it, inserted] = columns.emplace(w, static_cast<int>(columns.size()));
            row.emplace_back(it->second, c);
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
    }
    return rank_of(std::move(rows));
}

long abstract_dim_at(const GeneratorModel& model,
                     const std::vector<Relation>& rels, int d, long cap) {
    std::vector<Monomial> monos = monomials_of_degree(model, d, cap);
    std::map<Monomial, int> index;
    for (std::size_t i = 0; i < monos.size(); ++i)
        index.emplace(monos[i], static_cast<int>(i));
    RowEchelon ech;
    Monomial shifted(model.count(), 0);
    for (const Relation& rel : rels) {
        if (rel.degree > d) continue;
        std::vector<Monomial> mults = monomials_of_degree(model, d - rel.degree, cap);
        for (const Monomial& mu : mults) {
            SparseRow row;
            row.reserve(rel.terms.size());
            for (const auto& [nu, c] : rel.terms) {
                for (int gen = 0; gen < model.count(); ++gen)
                    shifted[gen] = mu[gen] + nu[gen];
                row.emplace_back(index.at(shifted), c);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            ech.insert(std::move(row));
        }
    }
    return static_cast<long>(monos.size()) - ech.rank();
}

}  // namespace

HilbertFunction image_hilbert(int g, int m, long termCap, int threads) {
    GeneratorModel model = build_model(g, m);
    const int cap = m * model.sp.factorTopDegree();
    std::vector<int> degrees;
    for (int d = 0; d <= cap; d += 2) degrees.push_back(d);
    std::vector<long> dims(degrees.size(), 0);
    if (threads < 1) threads = 1;
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        try {
            dims[i] = image_rank_at(model, degrees[i], termCap);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    HilbertFunction out;
    for (std::size_t i = 0; i < degrees.size(); ++i) out[degrees[i]] = dims[i];
    return out;
}

HilbertFunction abstract_hilbert(int g, int m, long termCap, int threads,
                                 const PresentationOptions& opts) {
    GeneratorModel model = build_model(g, m);
    const int genDeg = 2 * model.sp.topPower;
    const int cap = m * model.sp.factorTopDegree() + genDeg;
    std::vector<Relation> rels = build_relations(model, opts);
    std::vector<int> degrees;
    for (int d = 0; d <= cap; d += 2) degrees.push_back(d);
    std::vector<long> dims(degrees.size(), 0);
    if (threads < 1) threads = 1;
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        try {
            dims[i] = abstract_dim_at(model, rels, degrees[i], termCap);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    HilbertFunction out;
    for (std::size_t i = 0; i < degrees.size(); ++i) out[degrees[i]] = dims[i];
    return out;
}

Report injectivity_report(int g, int m, long termCap, int threads) {
    Report rep;
    double t0 = now_ms();
    CheckResult r;
    r.check = "hilbert-injectivity";
    r.params = {{"g", std::to_string(g)}, {"m", std::to_string(m)}};
    try {
        HilbertFunction image = image_hilbert(g, m, termCap, threads);
        HilbertFunction abstract = abstract_hilbert(g, m, termCap, threads);
        std::ostringstream os;
        bool ok = true;
        for (const auto& [d, dim] : abstract) {
            long img = image.count(d) ? image.at(d) : 0;
            if (dim != img) {
                ok = false;
                if (r.witness.empty()) {
                    std::ostringstream w;
                    w << "degree " << d << ": abstract=" << dim << " image=" << img;
                    r.witness = w.str();
                }
            }
        }
        for (const auto& [d, dim] : image) {
            if (d % 2 == 0 && abstract.count(d)) continue;
            ok = false;
        }
        os << "dims=";
        for (const auto& [d, dim] : image) os << dim << (d + 2 <= image.rbegin()->first ? "," : "");
        r.detail = os.str();
        if (!ok) r.status = Status::Fail;
    } catch (const CapExceeded& e) {
        r.status = Status::SkippedCap;
        r.detail = e.what();
    }
    r.wallMs = now_ms() - t0;
    rep.add(std::move(r));
    return rep;
}

}  // namespace coh
