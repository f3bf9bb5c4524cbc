#include "brunnian/tree_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace brunnian {

TreeVector operator+(const TreeVector& a, const TreeVector& b) {
    if (a.n != b.n) throw parse_error("degree mismatch in TreeVector sum");
    TreeVector out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

TreeVector operator-(const TreeVector& a, const TreeVector& b) {
    if (a.n != b.n) throw parse_error("degree mismatch in TreeVector difference");
    TreeVector out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

TreeVector operator*(long long k, const TreeVector& v) {
    TreeVector out = v;
    for (long long& c : out.coords) c *= k;
    return out;
}

namespace {

void collect_leaves(const TreeMono& t, std::vector<int>& out) {
    if (t.is_leaf())
        out.push_back(t.leaf);
    else
        for (const TreeMono& k : t.kids) collect_leaves(k, out);
}

bool contains_leaf(const TreeMono& t, int label) {
    if (t.is_leaf()) return t.leaf == label;
    return contains_leaf(t.kids[0], label) || contains_leaf(t.kids[1], label);
}

// ---- parsing ----------------------------------------------------------

struct Expr {
    int leaf = 0;
    std::vector<Expr> kids;
    bool is_leaf() const { return kids.empty(); }
};

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    Expr parse_expr() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of tree expression");
        if (s[pos] == '(') {
            ++pos;
            Expr e;
            e.kids.push_back(parse_expr());
            e.kids.push_back(parse_expr());
            skip_ws();
            if (pos >= s.size() || s[pos] != ')')
                throw parse_error("expected ')' in tree expression");
            ++pos;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            int v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos] - '0');
                ++pos;
            }
            Expr e;
            e.leaf = v;
            return e;
        }
        throw parse_error(std::string("unexpected character '") + s[pos] + "' in tree expression");
    }
};

// Graph form used only while re-rooting the parsed expression at leaf n+1.
struct Graph {
    // vertex 0..V-1; leaves have exactly one neighbor, trivalent have three
    // in counterclockwise order.
    std::vector<std::vector<int>> nbrs;
    std::vector<int> leaf_label;  // 0 for trivalent
};

int build_graph(const Expr& e, Graph& g) {
    int id = static_cast<int>(g.nbrs.size());
    g.nbrs.emplace_back();
    g.leaf_label.push_back(e.leaf);
    if (!e.is_leaf()) {
        for (const Expr& k : e.kids) {
            int kid = build_graph(k, g);
            g.nbrs[id].push_back(kid);
            g.nbrs[kid].insert(g.nbrs[kid].begin(), id);  // parent edge first
        }
    }
    return id;
}

TreeMono extract_mono(const Graph& g, int v, int from) {
    if (g.leaf_label[v] > 0) return TreeMono::make_leaf(g.leaf_label[v]);
    const auto& nb = g.nbrs[v];
    int k = 0;
    while (nb[k] != from) ++k;
    int a = nb[(k + 1) % 3];
    int b = nb[(k + 2) % 3];
    return TreeMono::make_node(extract_mono(g, a, v), extract_mono(g, b, v));
}

}  // namespace

LabeledTree::LabeledTree(int n, TreeMono rooted) : n_(n), mono_(std::move(rooted)) {
    if (n < 1) throw parse_error("tree degree must be >= 1");
    std::vector<int> leaves;
    collect_leaves(mono_, leaves);
    std::sort(leaves.begin(), leaves.end());
    if (static_cast<int>(leaves.size()) != n)
        throw parse_error("rooted tree of degree n needs n non-root leaves");
    for (int i = 0; i < n; ++i)
        if (leaves[i] != i + 1)
            throw parse_error("tree leaves must be labeled 1..n+1 without repetition");
}

LabeledTree parse_tree(const std::string& text) {
    Parser p{text};
    Expr top = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("trailing input after tree expression");
    if (top.is_leaf()) throw parse_error("a tree needs at least two leaves");

    Graph g;
    // The outermost pair is an edge, not a vertex: splice its two sides.
    int a = build_graph(top.kids[0], g);
    int b = build_graph(top.kids[1], g);
    g.nbrs[a].insert(g.nbrs[a].begin(), b);
    g.nbrs[b].insert(g.nbrs[b].begin(), a);

    std::vector<int> labels;
    int root = -1;
    for (int v = 0; v < static_cast<int>(g.nbrs.size()); ++v) {
        if (g.leaf_label[v] > 0) {
            labels.push_back(g.leaf_label[v]);
            if (g.nbrs[v].size() != 1) throw parse_error("leaf with more than one edge");
        } else if (g.nbrs[v].size() != 3) {
            throw parse_error("internal vertex is not trivalent");
        }
    }
    std::sort(labels.begin(), labels.end());
    int count = static_cast<int>(labels.size());
    if (count < 2) throw parse_error("a tree needs at least two leaves");
    for (int i = 0; i < count; ++i)
        if (labels[i] != i + 1)
            throw parse_error("tree leaves must be labeled 1..n+1 without repetition");
    int n = count - 1;
    for (int v = 0; v < static_cast<int>(g.nbrs.size()); ++v)
        if (g.leaf_label[v] == n + 1) root = v;
    TreeMono mono = extract_mono(g, g.nbrs[root][0], root);
    return LabeledTree(n, std::move(mono));
}

namespace {

std::string render_mono(const TreeMono& t) {
    if (t.is_leaf()) return std::to_string(t.leaf);
    return "(" + render_mono(t.kids[0]) + " " + render_mono(t.kids[1]) + ")";
}

}  // namespace

std::string format_tree(const LabeledTree& t) {
    return "(" + std::to_string(t.n() + 1) + " " + render_mono(t.monomial()) + ")";
}

LabeledTree comb_basis_tree(int n, const Perm& sigma) {
    if (n < 1) throw parse_error("comb tree degree must be >= 1");
    if (static_cast<int>(sigma.size()) != n - 1 || !is_perm(sigma))
        throw parse_error("comb label must be a permutation of 1..n-1");
    TreeMono m = TreeMono::make_leaf(n);
    for (int i = n - 2; i >= 0; --i)
        m = TreeMono::make_node(TreeMono::make_leaf(sigma[i]), std::move(m));
    return LabeledTree(n, std::move(m));
}

namespace {

// A monomial with its spine to leaf n straightened: hangings[i] is the
// subtree at the i-th spine vertex counted from the root leaf n+1.
struct SpineForm {
    long long coeff;
    std::vector<TreeMono> hangings;
};

SpineForm to_spine(long long coeff, TreeMono t, int n) {
    SpineForm f{coeff, {}};
    TreeMono cur = std::move(t);
    while (!cur.is_leaf()) {
        // AS: transposing one vertex's cyclic order negates the tree.
        if (contains_leaf(cur.kids[0], n)) {
            f.coeff = -f.coeff;
            std::swap(cur.kids[0], cur.kids[1]);
        }
        f.hangings.push_back(std::move(cur.kids[0]));
        TreeMono next = std::move(cur.kids[1]);
        cur = std::move(next);
    }
    if (cur.leaf != n) throw integrity_error("spine of tree monomial does not end at leaf n");
    return f;
}

TreeVector reduce_monomials(std::vector<std::pair<long long, TreeMono>> items, int n,
                            ReduceStrategy strategy) {
    TreeVector out = TreeVector::zero(n);
    std::vector<SpineForm> work;
    for (auto& [c, t] : items) work.push_back(to_spine(c, std::move(t), n));
    while (!work.empty()) {
        SpineForm f = std::move(work.back());
        work.pop_back();
        int pick = -1;
        for (int i = 0; i < static_cast<int>(f.hangings.size()); ++i) {
            if (!f.hangings[i].is_leaf()) {
                pick = i;
                if (strategy == ReduceStrategy::spine_outer) break;
            }
        }
        if (pick < 0) {
            Perm sigma;
            for (const TreeMono& h : f.hangings) sigma.push_back(h.leaf);
            out.coords[perm_rank(sigma)] += f.coeff;
            continue;
        }
        // IHX at the edge joining the picked branch vertex to the spine:
        // [[P,Q],R] = [P,[Q,R]] - [Q,[P,R]].
        TreeMono P = f.hangings[pick].kids[0];
        TreeMono Q = f.hangings[pick].kids[1];
        SpineForm f1{f.coeff, {}};
        SpineForm f2{-f.coeff, {}};
        for (int i = 0; i < static_cast<int>(f.hangings.size()); ++i) {
            if (i == pick) {
                f1.hangings.push_back(P);
                f1.hangings.push_back(Q);
                f2.hangings.push_back(Q);
                f2.hangings.push_back(P);
            } else {
                f1.hangings.push_back(f.hangings[i]);
                f2.hangings.push_back(f.hangings[i]);
            }
        }
        work.push_back(std::move(f1));
        work.push_back(std::move(f2));
    }
    return out;
}

}  // namespace

TreeVector reduce_to_basis(const LabeledTree& t, ReduceStrategy strategy) {
    return reduce_monomials({{1, t.monomial()}}, t.n(), strategy);
}

TreeVector reduce_to_basis(const std::vector<std::pair<long long, LabeledTree>>& combination,
                           ReduceStrategy strategy) {
    if (combination.empty()) throw parse_error("empty tree combination has no degree");
    int n = combination.front().second.n();
    std::vector<std::pair<long long, TreeMono>> items;
    for (const auto& [c, tree] : combination) {
        if (tree.n() != n) throw parse_error("mixed degrees in tree combination");
        items.emplace_back(c, tree.monomial());
    }
    return reduce_monomials(std::move(items), n, strategy);
}

SymSquareVector sym_square(const TreeVector& x) {
    int r = static_cast<int>(x.coords.size());
    SymSquareVector q;
    q.n = x.n;
    q.diag.assign(r, 0);
    q.off.assign(r * (r - 1) / 2, 0);
    for (int i = 0; i < r; ++i) {
        q.diag[i] = x.coords[i] * x.coords[i];
        for (int j = i + 1; j < r; ++j)
            q.off[SymSquareVector::off_index(r, i, j)] = x.coords[i] * x.coords[j];
    }
    return q;
}

}  // namespace brunnian
