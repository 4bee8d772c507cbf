#pragma once

#include "coh/rational.hpp"

#include <optional>
#include <vector>

namespace coh {

// Sparse row over Q: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Incremental exact row-echelon form. Rows are reduced against the stored
// pivots by leading column; a row that survives becomes a new pivot.
class RowEchelon {
public:
    // Returns true when the row was independent (rank increased).
    bool insert(SparseRow row);
    long rank() const { return static_cast<long>(pivots_.size()); }

private:
    // pivot leading column -> index into rows_
    std::vector<std::pair<int, std::size_t>> pivots_;
    std::vector<SparseRow> rows_;
    const SparseRow* findPivot(int col) const;
};

long rank_of(std::vector<SparseRow> rows);

// row -= c * pivot (sparse merge).
void axpy_row(SparseRow& row, const Rational& c, const SparseRow& pivot);

// Solves A x = b exactly by Gauss-Jordan on a dense matrix. Returns nullopt
// when the system is inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve_unique(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace coh
