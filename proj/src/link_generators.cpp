#include "brunnian/link_generators.hpp"

#include <random>
#include <sstream>

namespace brunnian {

namespace {

BraidWord group_commutator(const BraidWord& a, const BraidWord& b) {
    return a * b * a.inverse() * b.inverse();
}

// Right-normed commutator [w_1, [w_2, [..., w_k]]].
BraidWord right_normed(const std::vector<BraidWord>& ws) {
    BraidWord acc = ws.back();
    for (int i = static_cast<int>(ws.size()) - 2; i >= 0; --i)
        acc = group_commutator(ws[i], acc);
    return acc;
}

StringLinkPresentation verified(StringLinkPresentation s, const std::string& label) {
    if (!s.verify_brunnian())
        throw integrity_error("constructed presentation '" + label + "' failed the Brunnian check");
    return s;
}

StringLinkPresentation power(const StringLinkPresentation& s, int k) {
    BraidWord w(s.strands(), {});
    BraidWord base = k >= 0 ? s.braid().word() : s.braid().word().inverse();
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) w = w * base;
    return StringLinkPresentation(PureBraid(w));
}

}  // namespace

StringLinkPresentation milnor_string_link(int n, const Perm& sigma) {
    if (n < 1) throw parse_error("milnor_string_link needs n >= 1");
    if (static_cast<int>(sigma.size()) != n - 1 || !is_perm(sigma))
        throw parse_error("milnor_string_link needs sigma in S_{n-1}");
    int m = n + 1;
    if (n == 1)
        return verified(StringLinkPresentation(PureBraid(expand_pure_generator(1, 2, 2))), "beta_e");
    std::vector<BraidWord> args;
    args.reserve(n);
    for (int v : sigma) args.push_back(expand_pure_generator(v, m, m));
    args.push_back(expand_pure_generator(n, m, m));
    return verified(StringLinkPresentation(PureBraid(right_normed(args))),
                    "beta_" + perm_str(sigma));
}

StringLinkPresentation stack(const StringLinkPresentation& a, const StringLinkPresentation& b) {
    if (a.strands() != b.strands()) throw parse_error("strand count mismatch in stacking");
    StringLinkPresentation s(a.braid() * b.braid());
    s.verify_brunnian();
    return s;
}

StringLinkPresentation inverse(const StringLinkPresentation& s) {
    StringLinkPresentation r(s.braid().inverse());
    r.verify_brunnian();
    return r;
}

StringLinkPresentation conjugate(const PureBraid& g, const StringLinkPresentation& s) {
    if (g.strands() != s.strands()) throw parse_error("strand count mismatch in conjugation");
    StringLinkPresentation r(g * s.braid() * g.inverse());
    r.verify_brunnian();
    return r;
}

PDCode closure(const StringLinkPresentation& s) {
    return closure_pd(s.braid().word());
}

PureBraid random_pure_braid(int strands, unsigned long long seed, int length) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_i(1, strands - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    BraidWord w(strands, {});
    for (int t = 0; t < length; ++t) {
        int i = pick_i(rng);
        std::uniform_int_distribution<int> pick_j(i + 1, strands);
        BraidWord g = expand_pure_generator(i, pick_j(rng), strands);
        if (coin(rng)) g = g.inverse();
        w = w * g;
    }
    return PureBraid(w);
}

std::array<LinkRep, 4> scheme_family(int n, const Perm& sigma, const Perm& sigma_prime) {
    StringLinkPresentation bs = milnor_string_link(n, sigma);
    StringLinkPresentation bt = milnor_string_link(n, sigma_prime);
    BraidWord unlink(n + 1, {});
    return {link_from_braid(unlink), link_from_braid(bs.braid().word()),
            link_from_braid(bt.braid().word()), link_from_braid(stack(bs, bt).braid().word())};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw parse_error("");
        return v;
    } catch (...) {
        throw parse_error("bad " + what + " '" + s + "' in family spec");
    }
}

void add_entry(LinkFamily& fam, std::string label, StringLinkPresentation s) {
    if (!s.verify_brunnian())
        throw integrity_error("family entry '" + label + "' failed the Brunnian check");
    LinkEntry e;
    e.label = std::move(label);
    e.pd = closure(s);
    e.mu = milnor_vector(s);
    e.link = std::move(s);
    fam.entries.push_back(std::move(e));
}

}  // namespace

LinkFamily family_generators(int n, const std::vector<std::string>& spec_terms) {
    LinkFamily fam;
    fam.n = n;
    for (const std::string& term : spec_terms) {
        if (term.empty()) continue;
        auto parts = split(term, ':');
        const std::string& kind = parts[0];
        if (kind == "powers") {
            if (parts.size() != 3) throw parse_error("powers term needs powers:<sigma>:<kmin>..<kmax>");
            Perm sigma = parse_perm(parts[1], n - 1);
            auto range = parts[2];
            auto dots = range.find("..");
            if (dots == std::string::npos) throw parse_error("powers range needs <kmin>..<kmax>");
            int kmin = parse_int(range.substr(0, dots), "power");
            int kmax = parse_int(range.substr(dots + 2), "power");
            if (kmin > kmax) throw parse_error("empty power range in family spec");
            StringLinkPresentation base = milnor_string_link(n, sigma);
            for (int k = kmin; k <= kmax; ++k)
                add_entry(fam, "powers:" + perm_str(sigma) + "^" + std::to_string(k),
                          power(base, k));
        } else if (kind == "mix") {
            if (parts.size() != 2) throw parse_error("mix term needs mix:<s1>^<k1>,<s2>^<k2>,...");
            StringLinkPresentation acc{PureBraid(BraidWord(n + 1, {}))};
            std::string label = "mix";
            for (const std::string& fac : split(parts[1], ',')) {
                auto caret = fac.find('^');
                if (caret == std::string::npos) throw parse_error("mix factor needs <sigma>^<k>");
                Perm sigma = parse_perm(fac.substr(0, caret), n - 1);
                int k = parse_int(fac.substr(caret + 1), "exponent");
                acc = stack(acc, power(milnor_string_link(n, sigma), k));
                label += ":" + perm_str(sigma) + "^" + std::to_string(k);
            }
            add_entry(fam, label, acc);
        } else if (kind == "conj" || kind == "nullpair") {
            if (parts.size() != 4)
                throw parse_error(kind + " term needs " + kind + ":<sigma>:<seed>:<len>");
            Perm sigma = parse_perm(parts[1], n - 1);
            unsigned long long seed = std::stoull(parts[2]);
            int len = parse_int(parts[3], "conjugator length");
            PureBraid g = random_pure_braid(n + 1, seed, len);
            StringLinkPresentation base = milnor_string_link(n, sigma);
            if (kind == "conj") {
                add_entry(fam, "conj:" + perm_str(sigma) + ":" + parts[2] + ":" + parts[3],
                          conjugate(g, base));
            } else {
                add_entry(fam, "nullpair:" + perm_str(sigma) + ":" + parts[2] + ":" + parts[3],
                          stack(base, conjugate(g, inverse(base))));
            }
        } else {
            throw parse_error("unknown family spec term '" + term + "'");
        }
    }
    return fam;
}

}  // namespace brunnian
