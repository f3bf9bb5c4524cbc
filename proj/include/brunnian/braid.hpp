#pragma once

#include <string>
#include <vector>

#include "brunnian/errors.hpp"
#include "brunnian/free_group.hpp"
#include "brunnian/permutation.hpp"

namespace brunnian {

// Braid word on a fixed number of strands.  Letters are signed Artin
// generator indices: +i means sigma_i, -i means sigma_i^{-1}, 1 <= i < m.
class BraidWord {
public:
    BraidWord() = default;
    BraidWord(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }

    BraidWord inverse() const;
    // Cancels adjacent sigma_i sigma_i^{-1} pairs (valid in the braid group).
    BraidWord free_reduced() const;

    bool operator==(const BraidWord&) const = default;

private:
    int strands_ = 1;
    std::vector<int> letters_;
};

BraidWord operator*(const BraidWord& a, const BraidWord& b);

// perm[i-1] = bottom position of the strand entering at top position i.
Perm permutation_of(const BraidWord& b);

// Standard pure-braid generator A(i,j) = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}' ... s_{j-1}').
BraidWord expand_pure_generator(int i, int j, int strands);

// Geometric removal of the strand entering at position k; letters whose
// crossing involves that strand are dropped, the rest re-indexed.
BraidWord delete_strand(const BraidWord& b, int k);

// Grammar: whitespace-separated `s<i>` / `s<i>'` tokens plus the macros
// `A(<i>,<j>)` / `A(<i>,<j>)'`.
BraidWord parse_braid(const std::string& text, int strands);
std::string format_braid(const BraidWord& b);

// Artin action on the free group of rank = strands.  A word acts letter by
// letter, first letter first; sigma_i maps x_i -> x_i x_{i+1} x_i^{-1} and
// x_{i+1} -> x_i, fixing the other generators.
FreeGroupEndo artin_endo(const BraidWord& b);
FreeWord artin_image(const BraidWord& b, const FreeWord& w);
bool is_trivial_braid(const BraidWord& b);

// Braid word whose underlying permutation is the identity.
class PureBraid {
public:
    PureBraid() = default;
    explicit PureBraid(BraidWord word);

    const BraidWord& word() const { return word_; }
    int strands() const { return word_.strands(); }
    PureBraid inverse() const { return PureBraid(word_.inverse()); }

    bool operator==(const PureBraid&) const = default;

private:
    BraidWord word_;
};

PureBraid operator*(const PureBraid& a, const PureBraid& b);

enum class BrunnianFlag { unknown, verified_true, verified_false };

// Pure braid on n+1 strands presenting an (n+1)-component string link.
class StringLinkPresentation {
public:
    StringLinkPresentation() = default;
    explicit StringLinkPresentation(PureBraid braid);

    const PureBraid& braid() const { return braid_; }
    int n() const { return braid_.strands() - 1; }
    int strands() const { return braid_.strands(); }
    BrunnianFlag brunnian_flag() const { return flag_; }

    // Deleting any one strand of a Brunnian string link trivializes it, so
    // single deletions decide Brunnian-ness.  Result is cached.
    bool verify_brunnian() const;

private:
    PureBraid braid_;
    mutable BrunnianFlag flag_ = BrunnianFlag::unknown;
};

bool is_brunnian(const StringLinkPresentation& s);

}  // namespace brunnian
