#pragma once

#include "coh/rational.hpp"
#include "coh/report.hpp"

#include <map>
#include <vector>

namespace coh {
namespace schubert {

// Young-diagram partition constrained to the k x (n-k) box of a
// Grassmannian. Parts are weakly decreasing with trailing zeros trimmed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int size() const;                       // total boxes
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const;                  // 0-based, 0 beyond length
    bool fitsBox(int rows, int cols) const;
    std::string str() const;                // "(2,1)"

    auto operator<=>(const Partition&) const = default;
};

struct Grassmannian {
    int k, n;
    int boxCols() const { return n - k; }
    bool operator==(const Grassmannian&) const = default;
};

// Sparse element of H*(Gr(k,n)) in the Schubert basis.
class SchubertClass {
public:
    explicit SchubertClass(Grassmannian gr) : gr_(gr) {}

    const Grassmannian& space() const { return gr_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(const Partition& p, const Rational& c);
    bool operator==(const SchubertClass&) const = default;

private:
    Grassmannian gr_;
    std::map<Partition, Rational> terms_;
};

SchubertClass unit(Grassmannian gr);
SchubertClass sigma(Grassmannian gr, Partition p);

// Multiplication by the special class sigma_r: adds r boxes, no two in a
// column, staying inside the box. Throws for r outside 0..n-k.
SchubertClass pieri(const SchubertClass& a, int r);

// General product: the second factor is expanded into special classes by the
// Jacobi-Trudi determinant and applied through pieri.
SchubertClass mult(const SchubertClass& a, const SchubertClass& b);

// Coefficient of the full-box partition.
Rational integrate_top(const SchubertClass& a);

// Degree of c2(Q) restricted to the surface parametrizing lines on a base
// locus of a quadric pencil in P^5: 16 sigma_{2,1}^2 . sigma_2 in Gr(2,6).
Rational fano_surface_c2_degree();
Report fano_degree_check();

// Projective-bundle bookkeeping for the universal families over the space of
// quadric pencils in P^{2g+1}.
struct DimensionCounts {
    int g;
    int r;              // dim of the pencil parameter space
    int rankE;          // conditions a linear subspace imposes
    int s;              // fiber dim over the Grassmannian: r - rankE
    int fiberY;         // r - 2, over a point of P^{2g+1}
    int fiberYYOff;     // r - 4, over an off-diagonal point pair
    int fiberYYOn;      // r - 2, over a diagonal point
    int fiberFYOff;     // r - 8, off the universal line (g = 2 only)
    int fiberFYOn;      // r - 6, on the universal line (g = 2 only)
};

DimensionCounts dimension_counts(int g);
Report dimension_report(int g);

}  // namespace schubert
}  // namespace coh
