#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "brunnian/errors.hpp"

namespace brunnian {

// One-line notation, values 1..k.  The unique element of S_0 is the empty
// vector and prints as "e".
using Perm = std::vector<int>;

inline bool is_perm(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

// All of S_k in lexicographic one-line order.
inline std::vector<Perm> all_perms(int k) {
    if (k < 0) throw parse_error("permutation size must be >= 0");
    Perm p(k);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Lexicographic rank within S_k (factorial number system).
inline int perm_rank(const Perm& p) {
    int k = static_cast<int>(p.size());
    int rank = 0;
    for (int i = 0; i < k; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < k; ++j)
            if (p[j] < p[i]) ++smaller;
        int f = 1;
        for (int t = 2; t <= k - 1 - i; ++t) f *= t;
        rank += smaller * f;
    }
    return rank;
}

inline int factorial(int k) {
    int f = 1;
    for (int t = 2; t <= k; ++t) f *= t;
    return f;
}

inline std::string perm_str(const Perm& p) {
    if (p.empty()) return "e";
    std::string s;
    for (int v : p) s += static_cast<char>('0' + v);
    return s;
}

// Digit-string one-line notation, e.g. "21" for the transposition in S_2.
// Only defined for k <= 9.
inline Perm parse_perm(const std::string& text, int k) {
    if (k > 9) throw parse_error("permutation text format requires k <= 9");
    if (k == 0) {
        if (text.empty() || text == "e") return {};
        throw parse_error("expected the empty permutation, got '" + text + "'");
    }
    if (static_cast<int>(text.size()) != k)
        throw parse_error("permutation '" + text + "' has wrong length for S_" + std::to_string(k));
    Perm p;
    for (char c : text) {
        if (c < '1' || c > '9') throw parse_error("bad character in permutation '" + text + "'");
        p.push_back(c - '0');
    }
    if (!is_perm(p)) throw parse_error("'" + text + "' is not a permutation of 1.." + std::to_string(k));
    return p;
}

}  // namespace brunnian
