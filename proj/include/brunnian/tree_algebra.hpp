#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brunnian/errors.hpp"
#include "brunnian/permutation.hpp"

namespace brunnian {

// Element of the degree-n tree group written in the comb basis {t_sigma},
// coords indexed by the lexicographic rank of sigma in S_{n-1}.
struct TreeVector {
    int n = 0;
    std::vector<long long> coords;

    static TreeVector zero(int n) {
        return TreeVector{n, std::vector<long long>(factorial(n - 1), 0)};
    }
    static TreeVector unit(int n, int rank_index) {
        TreeVector v = zero(n);
        v.coords.at(rank_index) = 1;
        return v;
    }
    bool is_zero() const {
        for (long long c : coords)
            if (c != 0) return false;
        return true;
    }
    bool operator==(const TreeVector&) const = default;
};

TreeVector operator+(const TreeVector& a, const TreeVector& b);
TreeVector operator-(const TreeVector& a, const TreeVector& b);
TreeVector operator*(long long k, const TreeVector& v);

// Element of the half-square lattice inside Sym^2(T (x) Q): diag[s] is the
// coefficient of (1/2) t_s^2, off[{s,s'}] the coefficient of t_s t_s'.
struct SymSquareVector {
    int n = 0;
    std::vector<long long> diag;
    std::vector<long long> off;  // unordered pairs i < j, packed

    static int off_index(int r, int i, int j) {
        return i * (2 * r - i - 1) / 2 + (j - i - 1);
    }
    static int lattice_rank(int r) { return r * (r + 1) / 2; }
    bool operator==(const SymSquareVector&) const = default;
};

// Binary-tree monomial: the tree rooted at the leaf carrying the largest
// label, childrens' order recording the counterclockwise vertex orientation.
struct TreeMono {
    int leaf = 0;  // > 0 for a leaf
    std::vector<TreeMono> kids;

    bool is_leaf() const { return kids.empty(); }
    static TreeMono make_leaf(int label) { return TreeMono{label, {}}; }
    static TreeMono make_node(TreeMono a, TreeMono b) {
        TreeMono t;
        t.kids.push_back(std::move(a));
        t.kids.push_back(std::move(b));
        return t;
    }
    bool operator==(const TreeMono&) const = default;
};

// Labeled vertex-oriented unitrivalent tree of degree n: n+1 leaves labeled
// 1..n+1, stored canonically as the monomial rooted at leaf n+1.
class LabeledTree {
public:
    LabeledTree(int n, TreeMono rooted);

    int n() const { return n_; }
    const TreeMono& monomial() const { return mono_; }

    bool operator==(const LabeledTree&) const = default;

private:
    int n_;
    TreeMono mono_;
};

// Grammar: fully parenthesized nested pairs, leaves as integers, the parent
// edge first in each internal vertex's cyclic order; the outermost pair is
// the edge joining its two sides.  Example: `(1 (2 (3 4)))`.
LabeledTree parse_tree(const std::string& text);
std::string format_tree(const LabeledTree& t);

// Comb with spine ending at leaves n and n+1 and teeth sigma(1)..sigma(n-1).
LabeledTree comb_basis_tree(int n, const Perm& sigma);

// Two independent IHX edge-selection orders; they must agree (confluence).
enum class ReduceStrategy { spine_outer, spine_inner };

TreeVector reduce_to_basis(const LabeledTree& t, ReduceStrategy strategy = ReduceStrategy::spine_outer);
TreeVector reduce_to_basis(const std::vector<std::pair<long long, LabeledTree>>& combination,
                           ReduceStrategy strategy = ReduceStrategy::spine_outer);

// q(x) = (1/2) x^2 expanded over the half-square lattice basis.
SymSquareVector sym_square(const TreeVector& x);

}  // namespace brunnian
