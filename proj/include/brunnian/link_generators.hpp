#pragma once

#include <array>
#include <string>
#include <vector>

#include "brunnian/milnor.hpp"
#include "brunnian/pd_code.hpp"

namespace brunnian {

// One verified-Brunnian link with its presentation, diagram and cached
// Milnor vector.
struct LinkEntry {
    std::string label;
    StringLinkPresentation link;
    PDCode pd;
    TreeVector mu;
};

struct LinkFamily {
    int n = 0;
    std::vector<LinkEntry> entries;
};

// The pure braid beta_sigma on n+1 strands whose strand n+1 realizes the
// iterated commutator of A(sigma(1),n+1), ..., A(sigma(n-1),n+1), A(n,n+1);
// its closure is Milnor's link L_sigma, dual to the Milnor invariants:
// mu_tau(L_sigma) = delta_{tau,sigma}.  For n = 1 this is the Hopf string
// link A(1,2).
StringLinkPresentation milnor_string_link(int n, const Perm& sigma);

// Stacking product of the string link monoid; Brunnian flag re-verified.
StringLinkPresentation stack(const StringLinkPresentation& a, const StringLinkPresentation& b);

StringLinkPresentation inverse(const StringLinkPresentation& s);

// g s g^{-1} for a pure braid g; the closure is ambient isotopic.
StringLinkPresentation conjugate(const PureBraid& g, const StringLinkPresentation& s);

PDCode closure(const StringLinkPresentation& s);

// Deterministic pure braid built from `length` random A(i,j)^{+-1} factors.
PureBraid random_pure_braid(int strands, unsigned long long seed, int length);

// The four links (U, L_sigma, L_sigma', closure(beta_sigma beta_sigma'))
// whose alternating sum evaluates the degree-2n bracket at (sigma, sigma').
std::array<LinkRep, 4> scheme_family(int n, const Perm& sigma, const Perm& sigma_prime);

// Family spec mini-grammar, one term per string:
//   powers:<sigma>:<kmin>..<kmax>      beta_sigma^k for k in the range
//   mix:<sigma1>^<k1>,<sigma2>^<k2>    stacked powers
//   conj:<sigma>:<seed>:<len>          g beta_sigma g^{-1}
//   nullpair:<sigma>:<seed>:<len>      stack(beta_sigma, g beta_sigma^{-1} g^{-1})
// Permutations are digit strings over 1..n-1 ("e" for n = 1).
LinkFamily family_generators(int n, const std::vector<std::string>& spec_terms);

}  // namespace brunnian
