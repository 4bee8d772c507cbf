#include "coh/linalg.hpp"

#include <algorithm>

namespace coh {

void axpy_row(SparseRow& row, const Rational& c, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -c * pivot[j].second);
            ++j;
        } else {
            Rational v = row[i].second - c * pivot[j].second;
            if (!is_zero(v)) out.emplace_back(row[i].first, v);
            ++i;
            ++j;
        }
    }
    row = std::move(out);
}

const SparseRow* RowEchelon::findPivot(int col) const {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    if (it == pivots_.end() || it->first != col) return nullptr;
    return &rows_[it->second];
}

bool RowEchelon::insert(SparseRow row) {
    while (!row.empty()) {
        const SparseRow* piv = findPivot(row.front().first);
        if (!piv) break;
        axpy_row(row, row.front().second, *piv);
    }
    if (row.empty()) return false;
    // normalize to leading coefficient 1
    Rational lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    int col = row.front().first;
    rows_.push_back(std::move(row));
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    pivots_.insert(it, {col, rows_.size() - 1});
    return true;
}

long rank_of(std::vector<SparseRow> rows) {
    RowEchelon ech;
    for (auto& r : rows) ech.insert(std::move(r));
    return ech.rank();
}

std::optional<std::vector<Rational>> solve_unique(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (rows == 0) return std::nullopt;
    const std::size_t cols = a[0].size();
    std::vector<int> pivotCol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && is_zero(a[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        std::swap(b[sel], b[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][c])) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivotCol.push_back(static_cast<int>(c));
        ++r;
    }
    if (pivotCol.size() != cols) return std::nullopt;  // underdetermined
    for (std::size_t i = r; i < rows; ++i)
        if (!is_zero(b[i])) return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < cols; ++i) x[pivotCol[i]] = b[i];
    return x;
}

}  // namespace coh
