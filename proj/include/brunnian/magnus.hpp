#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brunnian/errors.hpp"
#include "brunnian/free_group.hpp"

namespace brunnian {

using bigint = boost::multiprecision::cpp_int;

// Truncated integer noncommutative power series in X_1..X_rank, all stored
// monomials of length <= cutoff.  Monomials are packed into 64 bits: the
// length in the top nibble, then one nibble per index, so rank and cutoff
// are both capped at 15 (plenty at desk scale) and the numeric order of
// keys is degree-then-lex.
class NCPoly {
public:
    NCPoly(int rank, int cutoff);
    static NCPoly one(int rank, int cutoff);

    int rank() const { return rank_; }
    int cutoff() const { return cutoff_; }
    const std::map<std::uint64_t, bigint>& terms() const { return terms_; }
    bool is_one() const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& mono, const bigint& c);
    bigint coefficient_of(const std::vector<int>& mono) const;

    NCPoly& operator+=(const NCPoly& o);
    NCPoly operator-() const;
    bool operator==(const NCPoly&) const = default;

    static std::uint64_t pack(const std::vector<int>& mono, int rank, int cutoff);
    static std::vector<int> unpack(std::uint64_t key);

private:
    int rank_;
    int cutoff_;
    std::map<std::uint64_t, bigint> terms_;  // absent = 0

    friend NCPoly nc_mul(const NCPoly&, const NCPoly&);
    friend NCPoly magnus_expand(const FreeWord&, int);
};

// Product truncated to degree <= cutoff.
NCPoly nc_mul(const NCPoly& p, const NCPoly& q);

// x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i + X_i^2 - ... +- X_i^cutoff,
// multiplicative over the word.
NCPoly magnus_expand(const FreeWord& w, int cutoff);

bigint coefficient(const NCPoly& p, const std::vector<int>& index_seq);

}  // namespace brunnian
