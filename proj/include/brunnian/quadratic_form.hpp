#pragma once

#include <string>
#include <vector>

#include "brunnian/conway.hpp"
#include "brunnian/link_generators.hpp"

namespace brunnian {

// Coefficients f_{sigma,sigma'} of the quadratic form, stored row-major over
// the lexicographic order on S_{n-1}; entries below the diagonal are zero.
struct QuadraticFormMatrix {
    int n = 0;
    std::string invariant;
    std::vector<long long> f;  // r x r, row-major

    int rank() const;
    long long at(int i, int j) const;
};

// Alternating sum of the invariant over the four links of
// scheme_family(n, sigma, sigma'):  f(U) - f(L_s) - f(L_s') + f(L_s L_s').
long long bracket_value(const InvariantFunctional& f, int n, const Perm& sigma,
                        const Perm& sigma_prime);

// Diagonal entries are half of an even bracket; an odd diagonal bracket is a
// convention bug and halts with diagnostics instead of rounding.
QuadraticFormMatrix fit_coefficients(const InvariantFunctional& f, int n);

struct ReportRow {
    std::string label;
    std::vector<long long> mu;
    long long f_value = 0;
    long long predicted = 0;
    bool match = false;
};

struct VerificationReport {
    std::string invariant;
    int n = 0;
    std::vector<std::string> order;  // S_{n-1} in the fixed total order
    QuadraticFormMatrix coefficients;
    std::vector<ReportRow> rows;
    int pass = 0;
    int fail = 0;
    std::string kind;  // "quadratic" or "vanishing"

    bool all_match() const { return fail == 0; }
};

// Checks f(L) - f(U) = sum f_{s,s'} mu_s(L) mu_s'(L) exactly over the family.
VerificationReport verify_quadratic(const InvariantFunctional& f, int n, const LinkFamily& family,
                                    const QuadraticFormMatrix& coeffs);

// Invariants of degree < 2n agree on L and the unlink: checks
// a_d(L) = a_d(U) for each listed degree.  Parity-impossible degrees
// (a_d identically zero on n+1 components) are rejected as vacuous.
VerificationReport vanishing_check(int n, const LinkFamily& family, const std::vector<int>& degrees);

std::string report_to_json(const VerificationReport& report, bool pretty = false);

}  // namespace brunnian
