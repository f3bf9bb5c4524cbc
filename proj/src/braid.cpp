#include "brunnian/braid.hpp"

#include <numeric>
#include <sstream>

namespace brunnian {

namespace {

void check_braid_letter(int strands, int letter) {
    int i = letter > 0 ? letter : -letter;
    if (letter == 0 || i < 1 || i >= strands)
        throw parse_error("braid generator " + std::to_string(letter) +
                          " out of range for " + std::to_string(strands) + " strands");
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw parse_error("braid needs at least one strand");
    for (int l : letters_) check_braid_letter(strands, l);
}

BraidWord BraidWord::inverse() const {
    std::vector<int> rev(letters_.rbegin(), letters_.rend());
    for (int& l : rev) l = -l;
    return BraidWord(strands_, std::move(rev));
}

BraidWord BraidWord::free_reduced() const {
    std::vector<int> out;
    for (int l : letters_) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return BraidWord(strands_, std::move(out));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) throw parse_error("strand count mismatch in braid product");
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

Perm permutation_of(const BraidWord& b) {
    int m = b.strands();
    // pos[s-1] = current position of the strand that entered at position s
    Perm pos(m);
    std::iota(pos.begin(), pos.end(), 1);
    for (int l : b.letters()) {
        int i = l > 0 ? l : -l;
        for (int& p : pos) {
            if (p == i)
                p = i + 1;
            else if (p == i + 1)
                p = i;
        }
    }
    return pos;
}

BraidWord expand_pure_generator(int i, int j, int strands) {
    if (!(1 <= i && i < j && j <= strands))
        throw parse_error("pure generator A(" + std::to_string(i) + "," + std::to_string(j) +
                          ") needs 1 <= i < j <= strands");
    std::vector<int> letters;
    for (int t = j - 1; t > i; --t) letters.push_back(t);
    letters.push_back(i);
    letters.push_back(i);
    for (int t = i + 1; t <= j - 1; ++t) letters.push_back(-t);
    return BraidWord(strands, std::move(letters));
}

BraidWord delete_strand(const BraidWord& b, int k) {
    int m = b.strands();
    if (k < 1 || k > m) throw parse_error("strand index out of range");
    if (m == 1) return BraidWord(1, {});
    // arrangement[p-1] = strand currently at position p
    std::vector<int> at(m);
    std::iota(at.begin(), at.end(), 1);
    std::vector<int> out;
    for (int l : b.letters()) {
        int i = l > 0 ? l : -l;
        bool involves_k = (at[i - 1] == k || at[i] == k);
        if (!involves_k) {
            int pos_k = 0;
            while (at[pos_k] != k) ++pos_k;  // 0-based position of strand k
            int idx = (pos_k < i - 1) ? i - 1 : i;
            out.push_back(l > 0 ? idx : -idx);
        }
        std::swap(at[i - 1], at[i]);
    }
    return BraidWord(m - 1, std::move(out));
}

BraidWord parse_braid(const std::string& text, int strands) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (tok.size() > 1 && tok.back() == '\'') {
            inv = true;
            tok.pop_back();
        }
        if (tok.size() >= 2 && tok[0] == 's') {
            int idx;
            try {
                idx = std::stoi(tok.substr(1));
            } catch (...) {
                throw parse_error("bad braid token '" + tok + "'");
            }
            check_braid_letter(strands, idx);
            letters.push_back(inv ? -idx : idx);
        } else if (tok.size() >= 6 && tok[0] == 'A' && tok[1] == '(' && tok.back() == ')') {
            auto comma = tok.find(',');
            if (comma == std::string::npos) throw parse_error("bad braid token '" + tok + "'");
            int i, j;
            try {
                i = std::stoi(tok.substr(2, comma - 2));
                j = std::stoi(tok.substr(comma + 1, tok.size() - comma - 2));
            } catch (...) {
                throw parse_error("bad braid token '" + tok + "'");
            }
            BraidWord g = expand_pure_generator(i, j, strands);
            if (inv) g = g.inverse();
            letters.insert(letters.end(), g.letters().begin(), g.letters().end());
        } else {
            throw parse_error("bad braid token '" + tok + "'");
        }
    }
    return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
    std::string out;
    for (int l : b.letters()) {
        if (!out.empty()) out += ' ';
        out += 's';
        out += std::to_string(l > 0 ? l : -l);
        if (l < 0) out += '\'';
    }
    return out;
}

namespace {

// In-place Artin substitution for one braid letter.
FreeWord artin_apply_letter(const FreeWord& w, int letter, int rank) {
    int i = letter > 0 ? letter : -letter;
    std::vector<int> out;
    out.reserve(w.size() * 2);
    auto push = [&out](int l) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    };
    for (int l : w.letters()) {
        int g = l > 0 ? l : -l;
        if (letter > 0) {
            // x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
            if (g == i) {
                if (l > 0) {
                    push(i);
                    push(i + 1);
                    push(-i);
                } else {
                    push(i);
                    push(-(i + 1));
                    push(-i);
                }
            } else if (g == i + 1) {
                push(l > 0 ? i : -i);
            } else {
                push(l);
            }
        } else {
            // x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
            if (g == i) {
                push(l > 0 ? i + 1 : -(i + 1));
            } else if (g == i + 1) {
                if (l > 0) {
                    push(-(i + 1));
                    push(i);
                    push(i + 1);
                } else {
                    push(-(i + 1));
                    push(-i);
                    push(i + 1);
                }
            } else {
                push(l);
            }
        }
    }
    return free_reduce(rank, out);
}

}  // namespace

FreeWord artin_image(const BraidWord& b, const FreeWord& w) {
    if (w.rank() != b.strands()) throw parse_error("rank mismatch in Artin action");
    FreeWord cur = w;
    for (int l : b.free_reduced().letters()) cur = artin_apply_letter(cur, l, b.strands());
    return cur;
}

FreeGroupEndo artin_endo(const BraidWord& b) {
    int m = b.strands();
    std::vector<FreeWord> images;
    images.reserve(m);
    for (int i = 1; i <= m; ++i) images.push_back(artin_image(b, FreeWord::generator(m, i)));
    return FreeGroupEndo(m, std::move(images));
}

bool is_trivial_braid(const BraidWord& b) {
    return artin_endo(b).is_identity();
}

PureBraid::PureBraid(BraidWord word) : word_(std::move(word)) {
    Perm p = permutation_of(word_);
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i + 1)
            throw domain_refusal("braid word is not pure (permutation is not the identity)");
}

PureBraid operator*(const PureBraid& a, const PureBraid& b) {
    return PureBraid(a.word() * b.word());
}

StringLinkPresentation::StringLinkPresentation(PureBraid braid) : braid_(std::move(braid)) {
    if (braid_.strands() < 2)
        throw parse_error("string link presentation needs at least 2 strands");
}

bool StringLinkPresentation::verify_brunnian() const {
    if (flag_ == BrunnianFlag::unknown) {
        bool ok = true;
        for (int k = 1; k <= strands(); ++k) {
            if (!is_trivial_braid(delete_strand(braid_.word(), k))) {
                ok = false;
                break;
            }
        }
        flag_ = ok ? BrunnianFlag::verified_true : BrunnianFlag::verified_false;
    }
    return flag_ == BrunnianFlag::verified_true;
}

bool is_brunnian(const StringLinkPresentation& s) {
    return s.verify_brunnian();
}

}  // namespace brunnian
