#pragma once

#include <vector>

#include "brunnian/braid.hpp"
#include "brunnian/magnus.hpp"
#include "brunnian/tree_algebra.hpp"

namespace brunnian {

// Longitude of strand j: the word l with artin_endo(s)(x_j) = l x_j l^{-1},
// normalized so the total x_j-exponent of l is zero (framing removal).
FreeWord longitude(const StringLinkPresentation& s, int j);

// Non-repeating Milnor invariant mu_{i_1,...,i_k,j}: the coefficient of
// X_{i_1}...X_{i_k} in the Magnus expansion of the longitude of strand j.
// Well defined as an integer for string links; repeated indices are refused.
long long mu(const StringLinkPresentation& s, const std::vector<int>& index);

// mu_sigma = mu_{sigma(1),...,sigma(n-1),n,n+1} for sigma in S_{n-1}.
long long mu_sigma(const StringLinkPresentation& s, const Perm& sigma);

// Sum over sigma of mu_sigma(s) t_sigma; requires a Brunnian presentation
// (otherwise the length-(n+1) invariants are not a complete record).
TreeVector milnor_vector(const StringLinkPresentation& s);

}  // namespace brunnian
