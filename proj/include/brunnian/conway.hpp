#pragma once

#include <functional>
#include <string>
#include <vector>

#include "brunnian/pd_code.hpp"

namespace brunnian {

// Conway polynomial nabla(z); c[k] is the coefficient of z^k.
struct ConwayPoly {
    std::vector<long long> c;

    long long a(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : 0;
    }
    int degree() const;
    void trim();
    bool is_zero() const { return c.empty(); }

    bool operator==(const ConwayPoly&) const = default;
};

ConwayPoly operator+(const ConwayPoly& a, const ConwayPoly& b);
ConwayPoly operator-(const ConwayPoly& a, const ConwayPoly& b);
// Multiply by eps * z.
ConwayPoly shift_z(const ConwayPoly& p, int eps);

// Seifert linking matrix of the closed-braid surface (disks for strand
// positions, bands for letters); the homology basis is one loop per pair of
// consecutive bands in a column, ordered by (column, height).
struct SeifertMatrix {
    std::vector<std::vector<int>> v;

    int size() const { return static_cast<int>(v.size()); }
};

SeifertMatrix seifert_matrix(const BraidWord& b);

namespace detail {

// Sign conventions of the Seifert matrix entries; the defaults are fixed so
// that det(t^{1/2} V - t^{-1/2} V^T) written in z = t^{1/2} - t^{-1/2}
// reproduces the skein-relation Conway polynomial with positive letters as
// positive crossings.
struct SeifertConvention {
    int s1 = 1, s2 = 1;      // same-column neighbours sharing a band
    int pa = 0, qa = -1;     // adjacent columns, left loop opens first
    int pb = 1, qb = 0;      // adjacent columns, right loop opens first
};

SeifertMatrix seifert_matrix_with(const BraidWord& b, const SeifertConvention& conv);

}  // namespace detail

// Determinant method: det(t^{1/2} V - t^{-1/2} V^T) rewritten exactly in
// z = t^{1/2} - t^{-1/2}; returns 0 for split closures.
ConwayPoly conway(const BraidWord& b);

// Independent oracle: resolve crossings by nabla_+ - nabla_- = z nabla_0
// toward descending diagrams, memoized on canonicalized diagrams.
ConwayPoly conway_skein(const PDCode& pd, int crossing_limit = 16);

// A concrete Z-valued finite type invariant, e.g. "conway:a4".
struct InvariantFunctional {
    std::string name;
    int degree = 0;
    std::function<long long(const LinkRep&)> eval;
};

InvariantFunctional coeff_invariant(int k);
InvariantFunctional parse_invariant(const std::string& name);

}  // namespace brunnian
