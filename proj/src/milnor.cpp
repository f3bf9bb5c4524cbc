#include "brunnian/milnor.hpp"

#include <limits>
#include <set>

namespace brunnian {

FreeWord longitude(const StringLinkPresentation& s, int j) {
    int m = s.strands();
    if (j < 1 || j > m) throw parse_error("strand index out of range");
    FreeWord w = artin_image(s.braid().word(), FreeWord::generator(m, j));
    const auto& ls = w.letters();
    if (ls.size() % 2 == 0) throw integrity_error("image of a meridian has even length");
    std::size_t t = ls.size() / 2;
    if (ls[t] != j)
        throw integrity_error("image of meridian x_" + std::to_string(j) +
                              " is not a conjugate of it");
    for (std::size_t k = 0; k < t; ++k)
        if (ls[t + 1 + k] != -ls[t - 1 - k])
            throw integrity_error("meridian image is not in conjugate form");
    std::vector<int> prefix(ls.begin(), ls.begin() + t);
    FreeWord l = free_reduce(m, prefix);
    int e = l.exponent_sum(j);
    if (e != 0) {
        std::vector<int> tail(static_cast<std::size_t>(e > 0 ? e : -e), e > 0 ? -j : j);
        l = l * free_reduce(m, tail);
    }
    return l;
}

long long mu(const StringLinkPresentation& s, const std::vector<int>& index) {
    int m = s.strands();
    if (index.size() < 2) throw domain_refusal("Milnor index needs at least two entries");
    if (static_cast<int>(index.size()) > m)
        throw domain_refusal("Milnor index longer than the number of strands");
    std::set<int> seen;
    for (int i : index) {
        if (i < 1 || i > m) throw parse_error("Milnor index entry out of range");
        if (!seen.insert(i).second)
            throw domain_refusal("repeated Milnor indices are not supported (indeterminacy)");
    }
    int j = index.back();
    std::vector<int> head(index.begin(), index.end() - 1);
    FreeWord l = longitude(s, j);
    if (l.empty()) return 0;
    NCPoly p = magnus_expand(l, static_cast<int>(head.size()));
    bigint c = coefficient(p, head);
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
        throw integrity_error("Milnor invariant exceeds 64-bit range");
    return static_cast<long long>(c);
}

long long mu_sigma(const StringLinkPresentation& s, const Perm& sigma) {
    int n = s.n();
    if (static_cast<int>(sigma.size()) != n - 1 || !is_perm(sigma))
        throw parse_error("mu_sigma needs a permutation of 1..n-1");
    std::vector<int> index(sigma.begin(), sigma.end());
    index.push_back(n);
    index.push_back(n + 1);
    return mu(s, index);
}

TreeVector milnor_vector(const StringLinkPresentation& s) {
    if (!s.verify_brunnian())
        throw domain_refusal("Milnor vector requires a verified Brunnian presentation");
    int n = s.n();
    TreeVector v = TreeVector::zero(n);
    int idx = 0;
    for (const Perm& sigma : all_perms(n - 1)) v.coords[idx++] = mu_sigma(s, sigma);
    return v;
}

}  // namespace brunnian
