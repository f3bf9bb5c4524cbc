#include "brunnian/conway.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace brunnian {

using bigint = boost::multiprecision::cpp_int;

int ConwayPoly::degree() const {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
        if (c[k] != 0) return k;
    return -1;
}

void ConwayPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ConwayPoly operator+(const ConwayPoly& a, const ConwayPoly& b) {
    ConwayPoly out = a;
    if (out.c.size() < b.c.size()) out.c.resize(b.c.size(), 0);
    for (std::size_t k = 0; k < b.c.size(); ++k) out.c[k] += b.c[k];
    out.trim();
    return out;
}

ConwayPoly operator-(const ConwayPoly& a, const ConwayPoly& b) {
    ConwayPoly out = a;
    if (out.c.size() < b.c.size()) out.c.resize(b.c.size(), 0);
    for (std::size_t k = 0; k < b.c.size(); ++k) out.c[k] -= b.c[k];
    out.trim();
    return out;
}

ConwayPoly shift_z(const ConwayPoly& p, int eps) {
    if (p.c.empty()) return {};
    ConwayPoly out;
    out.c.assign(p.c.size() + 1, 0);
    for (std::size_t k = 0; k < p.c.size(); ++k) out.c[k + 1] = eps * p.c[k];
    return out;
}

// ---- Seifert matrix of a braid closure --------------------------------

namespace {

struct Loop {
    int column;     // between positions column and column+1
    int top, bot;   // letter indices (times) of its two bands
    int sign_top, sign_bot;
};

std::vector<Loop> surface_loops(const BraidWord& b) {
    int m = b.strands();
    std::vector<std::vector<std::pair<int, int>>> columns(m);  // (time, sign)
    const auto& ls = b.letters();
    for (int t = 0; t < static_cast<int>(ls.size()); ++t) {
        int i = ls[t] > 0 ? ls[t] : -ls[t];
        columns[i - 1].push_back({t, ls[t] > 0 ? 1 : -1});
    }
    std::vector<Loop> loops;
    for (int i = 0; i + 1 < m; ++i)
        for (std::size_t t = 0; t + 1 < columns[i].size(); ++t)
            loops.push_back({i + 1, columns[i][t].first, columns[i][t + 1].first,
                             columns[i][t].second, columns[i][t + 1].second});
    return loops;
}

}  // namespace

namespace detail {

SeifertMatrix seifert_matrix_with(const BraidWord& b, const SeifertConvention& conv) {
    std::vector<Loop> loops = surface_loops(b);
    int g = static_cast<int>(loops.size());
    SeifertMatrix out;
    out.v.assign(g, std::vector<int>(g, 0));
    for (int x = 0; x < g; ++x) {
        out.v[x][x] = (loops[x].sign_top + loops[x].sign_bot) / 2;
        for (int y = x + 1; y < g; ++y) {
            const Loop &p = loops[x], &q = loops[y];
            if (p.column == q.column && p.bot == q.top) {
                // consecutive loops sharing one band
                int eps = p.sign_bot;
                out.v[x][y] = (conv.s1 + conv.s2 * eps) / 2;
                out.v[y][x] = (-conv.s1 + conv.s2 * eps) / 2;
            } else if (q.column == p.column + 1) {
                if (p.top < q.top && q.top < p.bot && p.bot < q.bot) {
                    out.v[x][y] = conv.pa;
                    out.v[y][x] = conv.qa;
                } else if (q.top < p.top && p.top < q.bot && q.bot < p.bot) {
                    out.v[x][y] = conv.pb;
                    out.v[y][x] = conv.qb;
                }
            } else if (p.column == q.column + 1) {
                if (q.top < p.top && p.top < q.bot && q.bot < p.bot) {
                    out.v[y][x] = conv.pa;
                    out.v[x][y] = conv.qa;
                } else if (p.top < q.top && q.top < p.bot && p.bot < q.bot) {
                    out.v[y][x] = conv.pb;
                    out.v[x][y] = conv.qb;
                }
            }
        }
    }
    return out;
}

}  // namespace detail

SeifertMatrix seifert_matrix(const BraidWord& b) {
    return detail::seifert_matrix_with(b, detail::SeifertConvention{});
}

// ---- modular determinant machinery -------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> det_primes(int count) {
    static std::vector<u64> cache;
    u64 next = cache.empty() ? ((1ull << 62) - 1) : cache.back() - 2;
    while (static_cast<int>(cache.size()) < count) {
        while (!is_prime_u64(next)) next -= 2;
        cache.push_back(next);
        next -= 2;
    }
    return std::vector<u64>(cache.begin(), cache.begin() + count);
}

u64 det_mod_p(std::vector<std::vector<u64>> m, u64 p) {
    int g = static_cast<int>(m.size());
    u64 det = 1;
    for (int col = 0; col < g; ++col) {
        int pivot = -1;
        for (int r = col; r < g; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = p - det;
            if (det == p) det = 0;
        }
        u64 inv = powmod(m[col][col], p - 2, p);
        det = mulmod(det, m[col][col], p);
        for (int r = col + 1; r < g; ++r) {
            if (m[r][col] == 0) continue;
            u64 f = mulmod(m[r][col], inv, p);
            for (int cc = col; cc < g; ++cc) {
                u64 sub = mulmod(f, m[col][cc], p);
                m[r][cc] = m[r][cc] >= sub ? m[r][cc] - sub : m[r][cc] + p - sub;
            }
        }
    }
    return det % p;
}

// Coefficients of Q(v) = det(v V - V^T), exactly, via evaluation at
// v = 0..g, Lagrange interpolation mod several primes and CRT.
std::vector<bigint> charlike_poly(const SeifertMatrix& V) {
    int g = V.size();
    if (g == 0) return {bigint(1)};
    double bits = 0.0;
    for (int i = 0; i < g; ++i) {
        long long rowsum = 0;
        for (int j = 0; j < g; ++j) rowsum += std::abs(V.v[i][j]) + std::abs(V.v[j][i]);
        bits += std::log2(std::max(2.0, static_cast<double>(rowsum) * (g + 1)));
    }
    int nprimes = static_cast<int>(bits / 61.0) + 2;
    std::vector<u64> primes = det_primes(nprimes);

    std::vector<std::vector<u64>> coeffs_mod;  // per prime, g+1 coefficients
    for (u64 p : primes) {
        std::vector<u64> values(g + 1);
        for (int v = 0; v <= g; ++v) {
            std::vector<std::vector<u64>> m(g, std::vector<u64>(g));
            for (int i = 0; i < g; ++i)
                for (int j = 0; j < g; ++j) {
                    long long e = static_cast<long long>(v) * V.v[i][j] - V.v[j][i];
                    m[i][j] = static_cast<u64>((e % static_cast<long long>(p) +
                                                static_cast<long long>(p)) %
                                               static_cast<long long>(p));
                }
            values[v] = det_mod_p(std::move(m), p);
        }
        // Lagrange interpolation on points 0..g.
        std::vector<u64> poly(g + 1, 0);
        for (int k = 0; k <= g; ++k) {
            // basis polynomial prod_{j != k} (v - j) / (k - j)
            std::vector<u64> num(1, 1);  // coefficients, low degree first
            for (int j = 0; j <= g; ++j) {
                if (j == k) continue;
                std::vector<u64> next(num.size() + 1, 0);
                u64 mj = j == 0 ? 0 : p - static_cast<u64>(j) % p;
                for (std::size_t d = 0; d < num.size(); ++d) {
                    next[d + 1] = (next[d + 1] + num[d]) % p;
                    next[d] = (next[d] + mulmod(num[d], mj, p)) % p;
                }
                num = std::move(next);
            }
            u64 den = 1;
            for (int j = 0; j <= g; ++j) {
                if (j == k) continue;
                long long diff = k - j;
                u64 dmod = static_cast<u64>((diff % static_cast<long long>(p) +
                                             static_cast<long long>(p)) %
                                            static_cast<long long>(p));
                den = mulmod(den, dmod, p);
            }
            u64 scale = mulmod(values[k], powmod(den, p - 2, p), p);
            for (std::size_t d = 0; d < num.size(); ++d)
                poly[d] = (poly[d] + mulmod(num[d], scale, p)) % p;
        }
        coeffs_mod.push_back(std::move(poly));
    }

    // CRT to symmetric representatives.
    std::vector<bigint> out(g + 1);
    bigint modulus = 1;
    for (u64 p : primes) modulus *= p;
    for (int d = 0; d <= g; ++d) {
        bigint x = 0, m = 1;
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
            bigint p = primes[pi];
            // x' = x + m * t where t = (r - x) / m mod p
            bigint r = coeffs_mod[pi][d];
            bigint minv = 1;
            {
                // modular inverse of m mod p via Fermat on u64
                u64 mm = static_cast<u64>(m % p);
                minv = powmod(mm, primes[pi] - 2, primes[pi]);
            }
            bigint t = ((r - x) % p + p) % p;
            t = t * minv % p;
            x += m * t;
            m *= p;
        }
        if (x * 2 > modulus) x -= modulus;
        out[d] = x;
    }
    return out;
}

bool closure_is_split(const BraidWord& b) {
    int m = b.strands();
    if (m == 1) return false;
    std::vector<bool> column_used(m - 1, false);
    for (int l : b.letters()) column_used[(l > 0 ? l : -l) - 1] = true;
    return !std::all_of(column_used.begin(), column_used.end(), [](bool u) { return u; });
}

long long checked_ll(const bigint& x, const char* what) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw integrity_error(std::string(what) + " exceeds 64-bit range");
    return static_cast<long long>(x);
}

}  // namespace

ConwayPoly conway(const BraidWord& b) {
    if (closure_is_split(b)) return {};
    SeifertMatrix V = seifert_matrix(b);
    int g = V.size();
    std::vector<bigint> q = charlike_poly(V);
    // det(t^{1/2} V - t^{-1/2} V^T) = u^{-g} Q(u^2) with u = t^{1/2};
    // rewrite exactly in the basis z^k = (u - u^{-1})^k.
    std::map<int, bigint> laurent;  // exponent of u -> coefficient
    for (int j = 0; j <= g; ++j)
        if (q[j] != 0) laurent[2 * j - g] = q[j];
    ConwayPoly out;
    out.c.assign(g + 1, 0);
    while (!laurent.empty()) {
        auto top = std::prev(laurent.end());
        int e = top->first;
        bigint c = top->second;
        if (e < 0) throw integrity_error("Conway substitution left a negative-degree remainder");
        out.c[e] = checked_ll(c, "Conway coefficient");
        // subtract c * (u - u^{-1})^e
        bigint binom = 1;
        for (int k = 0; k <= e; ++k) {
            bigint term = c * binom * ((k % 2) ? -1 : 1);
            int exp = e - 2 * k;
            bigint& slot = laurent[exp];
            slot -= term;
            if (slot == 0) laurent.erase(exp);
            binom = binom * (e - k) / (k + 1);
        }
    }
    out.trim();
    return out;
}

// ---- skein-relation oracle ---------------------------------------------

namespace {

struct SkeinDiagram {
    std::vector<PDCrossing> xs;
    int free_loops = 0;
};

struct Passage {
    int crossing;
    bool over;
};

// Successor map: arc -> (crossing it enters, role); every arc of a closed
// diagram enters exactly one crossing and leaves exactly one.
struct ArcMaps {
    std::map<int, std::pair<int, bool>> entering;  // arc -> (crossing, over?)

    static ArcMaps build(const std::vector<PDCrossing>& xs) {
        ArcMaps maps;
        for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
            if (!maps.entering.emplace(xs[i].in_under(), std::make_pair(i, false)).second)
                throw integrity_error("arc enters two crossings");
            if (!maps.entering.emplace(xs[i].in_over(), std::make_pair(i, true)).second)
                throw integrity_error("arc enters two crossings");
        }
        return maps;
    }
};

int traced_components(const std::vector<PDCrossing>& xs) {
    ArcMaps maps = ArcMaps::build(xs);
    std::map<int, bool> visited;
    for (const auto& [arc, _] : maps.entering) visited[arc] = false;
    int comps = 0;
    for (auto& [arc, seen] : visited) {
        if (seen) continue;
        ++comps;
        int cur = arc;
        while (!visited[cur]) {
            visited[cur] = true;
            auto [ci, over] = maps.entering.at(cur);
            cur = over ? xs[ci].out_over() : xs[ci].out_under();
        }
    }
    return comps;
}

// Walk the diagram in canonical order and return the first crossing whose
// first passage goes under, or -1 if the diagram is descending.
int first_bad_crossing(const std::vector<PDCrossing>& xs) {
    ArcMaps maps = ArcMaps::build(xs);
    std::map<int, bool> visited;
    for (const auto& [arc, _] : maps.entering) visited[arc] = false;
    std::vector<int> seen(xs.size(), 0);
    for (auto& [start, startseen] : visited) {
        if (startseen) continue;
        int cur = start;
        while (!visited[cur]) {
            visited[cur] = true;
            auto [ci, over] = maps.entering.at(cur);
            if (!seen[ci]) {
                if (!over) return ci;
                seen[ci] = 1;
            }
            cur = over ? xs[ci].out_over() : xs[ci].out_under();
        }
    }
    return -1;
}

PDCrossing switched(const PDCrossing& x) {
    // Exchanging over and under rotates the tuple to start at the new
    // incoming under-strand and flips the sign.
    PDCrossing y;
    y.sign = -x.sign;
    if (x.sign > 0)
        y.arcs = {x.arcs[3], x.arcs[0], x.arcs[1], x.arcs[2]};
    else
        y.arcs = {x.arcs[1], x.arcs[2], x.arcs[3], x.arcs[0]};
    return y;
}

void rename_arc(std::vector<PDCrossing>& xs, int from, int to) {
    for (PDCrossing& x : xs)
        for (int& a : x.arcs)
            if (a == from) a = to;
}

SkeinDiagram smoothed(const SkeinDiagram& d, int idx) {
    SkeinDiagram out;
    out.free_loops = d.free_loops;
    const PDCrossing& x = d.xs[idx];
    int p = x.in_under(), q = x.out_over();
    int r = x.in_over(), s = x.out_under();
    for (int i = 0; i < static_cast<int>(d.xs.size()); ++i)
        if (i != idx) out.xs.push_back(d.xs[i]);
    // oriented smoothing joins in-under with out-over and in-over with out-under
    if (p == q) {
        ++out.free_loops;
    } else {
        rename_arc(out.xs, q, p);
        if (r == q) r = p;
        if (s == q) s = p;
    }
    if (r == s)
        ++out.free_loops;
    else
        rename_arc(out.xs, s, r);
    return out;
}

std::string canonical_key(const SkeinDiagram& d) {
    std::vector<PDCrossing> xs = d.xs;
    auto tuple_less = [](const PDCrossing& a, const PDCrossing& b) {
        if (a.sign != b.sign) return a.sign < b.sign;
        return a.arcs < b.arcs;
    };
    std::sort(xs.begin(), xs.end(), tuple_less);
    std::map<int, int> relabel;
    for (const PDCrossing& x : xs)
        for (int a : x.arcs)
            if (!relabel.count(a)) relabel[a] = static_cast<int>(relabel.size()) + 1;
    for (PDCrossing& x : xs)
        for (int& a : x.arcs) a = relabel[a];
    std::sort(xs.begin(), xs.end(), tuple_less);
    std::string key = std::to_string(d.free_loops);
    for (const PDCrossing& x : xs) {
        key += x.sign > 0 ? '+' : '-';
        for (int a : x.arcs) {
            key += std::to_string(a);
            key += ',';
        }
    }
    return key;
}

ConwayPoly skein_eval(const SkeinDiagram& d, std::unordered_map<std::string, ConwayPoly>& memo) {
    if (d.xs.empty()) {
        ConwayPoly one;
        if (d.free_loops == 1) one.c = {1};
        return one;
    }
    std::string key = canonical_key(d);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    ConwayPoly result;
    int bad = first_bad_crossing(d.xs);
    if (bad < 0) {
        // descending: an unlink with as many components as the diagram traces
        int comps = traced_components(d.xs) + d.free_loops;
        if (comps == 1) result.c = {1};
    } else {
        int eps = d.xs[bad].sign;
        SkeinDiagram sw = d;
        sw.xs[bad] = switched(sw.xs[bad]);
        // nabla_+ - nabla_- = z nabla_0, solved for the side we hold
        result = skein_eval(sw, memo) + shift_z(skein_eval(smoothed(d, bad), memo), eps);
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

ConwayPoly conway_skein(const PDCode& pd, int crossing_limit) {
    if (pd.crossing_count() > crossing_limit)
        throw domain_refusal("diagram exceeds the skein crossing limit of " +
                             std::to_string(crossing_limit));
    SkeinDiagram d;
    d.xs = pd.crossings;
    d.free_loops = pd.components - (d.xs.empty() ? 0 : traced_components(d.xs));
    if (d.free_loops < 0) throw parse_error("PD component count below traced components");
    std::unordered_map<std::string, ConwayPoly> memo;
    return skein_eval(d, memo);
}

InvariantFunctional coeff_invariant(int k) {
    if (k < 0) throw parse_error("Conway coefficient index must be >= 0");
    InvariantFunctional f;
    f.name = "conway:a" + std::to_string(k);
    f.degree = k;
    f.eval = [k](const LinkRep& link) {
        if (link.braid) return conway(*link.braid).a(k);
        return conway_skein(link.pd).a(k);
    };
    return f;
}

InvariantFunctional parse_invariant(const std::string& name) {
    if (name.rfind("conway:a", 0) == 0) {
        try {
            return coeff_invariant(std::stoi(name.substr(8)));
        } catch (const parse_error&) {
            throw;
        } catch (...) {
            throw parse_error("bad invariant name '" + name + "'");
        }
    }
    throw parse_error("unknown invariant '" + name + "' (expected conway:a<k>)");
}

}  // namespace brunnian
