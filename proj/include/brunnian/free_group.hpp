#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brunnian/errors.hpp"

namespace brunnian {

// Freely reduced word in the free group of a fixed rank.  Letters are
// nonzero signed generator indices: +i means x_i, -i means x_i^{-1}.
class FreeWord {
public:
    FreeWord() = default;
    FreeWord(int rank, std::vector<int> letters);

    static FreeWord generator(int rank, int i);

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    FreeWord inverse() const;
    int exponent_sum(int generator) const;

    bool operator==(const FreeWord&) const = default;

private:
    int rank_ = 0;
    std::vector<int> letters_;
};

FreeWord operator*(const FreeWord& a, const FreeWord& b);

// Unique freely reduced form; idempotent.
FreeWord free_reduce(int rank, const std::vector<int>& letters);

// a b a^{-1} b^{-1}, freely reduced.
FreeWord commutator(const FreeWord& a, const FreeWord& b);

// Debug grammar: whitespace-separated `x3` / `x3'` tokens (prime = inverse).
FreeWord parse_free_word(const std::string& text, int rank);
std::string format_free_word(const FreeWord& w);

// Endomorphism of a free group, given by the images of the generators.
class FreeGroupEndo {
public:
    FreeGroupEndo(int rank, std::vector<FreeWord> images);
    static FreeGroupEndo identity(int rank);

    int rank() const { return rank_; }
    const FreeWord& image(int i) const;  // image of x_i, 1-based

    FreeWord apply(const FreeWord& w) const;
    // Composite mapping x |-> g(this(x)): `this` acts first.
    FreeGroupEndo then(const FreeGroupEndo& g) const;
    bool is_identity() const;

    bool operator==(const FreeGroupEndo&) const = default;

private:
    int rank_ = 0;
    std::vector<FreeWord> images_;
};

}  // namespace brunnian
