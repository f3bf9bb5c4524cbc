#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "brunnian/braid.hpp"

namespace brunnian {

// One crossing of an oriented link diagram.  Arcs are listed counterclockwise
// starting from the incoming under-strand, so arcs[0] -> arcs[2] is the
// under-strand.  For sign +1 the over-strand runs arcs[3] -> arcs[1], for
// sign -1 it runs arcs[1] -> arcs[3].
struct PDCrossing {
    int sign = 1;
    std::array<int, 4> arcs{};

    int in_under() const { return arcs[0]; }
    int out_under() const { return arcs[2]; }
    int in_over() const { return sign > 0 ? arcs[3] : arcs[1]; }
    int out_over() const { return sign > 0 ? arcs[1] : arcs[3]; }

    bool operator==(const PDCrossing&) const = default;
};

struct PDCode {
    int components = 0;
    std::vector<PDCrossing> crossings;

    int crossing_count() const { return static_cast<int>(crossings.size()); }

    bool operator==(const PDCode&) const = default;
};

// Closure of a braid word; all strands oriented downward through the braid,
// sigma_i (positive letter) produces a positive crossing.  Crossing count
// equals the word length; components follow the cycles of the permutation.
PDCode closure_pd(const BraidWord& b);

std::string pd_to_json(const PDCode& pd, bool pretty = false);
PDCode pd_from_json(const std::string& text);

// A link carried through the pipeline: always a diagram, and the braid whose
// closure it is whenever one is known (the fast Conway path needs it).
struct LinkRep {
    std::optional<BraidWord> braid;
    PDCode pd;
};

LinkRep link_from_braid(const BraidWord& b);

}  // namespace brunnian
