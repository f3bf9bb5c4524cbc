#include "brunnian/free_group.hpp"

#include <sstream>

namespace brunnian {

namespace {

void reducing_push(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter)
        out.pop_back();
    else
        out.push_back(letter);
}

void check_letter(int rank, int letter) {
    if (letter == 0 || letter < -rank || letter > rank)
        throw parse_error("generator index " + std::to_string(letter) +
                          " out of range for rank " + std::to_string(rank));
}

}  // namespace

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(rank) {
    if (rank < 0) throw parse_error("free group rank must be >= 0");
    letters_.reserve(letters.size());
    for (int l : letters) {
        check_letter(rank, l);
        reducing_push(letters_, l);
    }
}

FreeWord FreeWord::generator(int rank, int i) {
    return FreeWord(rank, {i});
}

FreeWord FreeWord::inverse() const {
    std::vector<int> rev(letters_.rbegin(), letters_.rend());
    for (int& l : rev) l = -l;
    FreeWord w;
    w.rank_ = rank_;
    w.letters_ = std::move(rev);  // inverse of a reduced word is reduced
    return w;
}

int FreeWord::exponent_sum(int generator) const {
    int s = 0;
    for (int l : letters_) {
        if (l == generator) ++s;
        if (l == -generator) --s;
    }
    return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    if (a.rank() != b.rank()) throw parse_error("rank mismatch in free-word product");
    std::vector<int> out = a.letters();
    for (int l : b.letters()) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return FreeWord(a.rank(), std::move(out));
}

FreeWord free_reduce(int rank, const std::vector<int>& letters) {
    return FreeWord(rank, letters);
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    if (a.rank() != b.rank()) throw parse_error("rank mismatch in commutator");
    return a * b * a.inverse() * b.inverse();
}

FreeWord parse_free_word(const std::string& text, int rank) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (tok.size() > 1 && tok.back() == '\'') {
            inv = true;
            tok.pop_back();
        }
        if (tok.size() < 2 || tok[0] != 'x')
            throw parse_error("bad free-word token '" + tok + "'");
        int idx;
        try {
            idx = std::stoi(tok.substr(1));
        } catch (...) {
            throw parse_error("bad free-word token '" + tok + "'");
        }
        check_letter(rank, idx);
        letters.push_back(inv ? -idx : idx);
    }
    return FreeWord(rank, std::move(letters));
}

std::string format_free_word(const FreeWord& w) {
    std::string out;
    for (int l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += 'x';
        out += std::to_string(l > 0 ? l : -l);
        if (l < 0) out += '\'';
    }
    return out;
}

FreeGroupEndo::FreeGroupEndo(int rank, std::vector<FreeWord> images)
    : rank_(rank), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rank)
        throw parse_error("endomorphism needs one image per generator");
    for (const FreeWord& w : images_)
        if (w.rank() != rank) throw parse_error("endomorphism image has wrong rank");
}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
    std::vector<FreeWord> images;
    images.reserve(rank);
    for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(rank, i));
    return FreeGroupEndo(rank, std::move(images));
}

const FreeWord& FreeGroupEndo::image(int i) const {
    if (i < 1 || i > rank_) throw parse_error("generator index out of range");
    return images_[i - 1];
}

FreeWord FreeGroupEndo::apply(const FreeWord& w) const {
    if (w.rank() != rank_) throw parse_error("rank mismatch in endo application");
    std::vector<int> out;
    for (int l : w.letters()) {
        const FreeWord& img = images_[(l > 0 ? l : -l) - 1];
        if (l > 0) {
            for (int m : img.letters()) reducing_push(out, m);
        } else {
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
                reducing_push(out, -*it);
        }
    }
    FreeWord r;
    return FreeWord(rank_, std::move(out));
}

FreeGroupEndo FreeGroupEndo::then(const FreeGroupEndo& g) const {
    if (g.rank_ != rank_) throw parse_error("rank mismatch in endo composition");
    std::vector<FreeWord> images;
    images.reserve(rank_);
    for (const FreeWord& w : images_) images.push_back(g.apply(w));
    return FreeGroupEndo(rank_, std::move(images));
}

bool FreeGroupEndo::is_identity() const {
    for (int i = 1; i <= rank_; ++i) {
        const auto& ls = images_[i - 1].letters();
        if (ls.size() != 1 || ls[0] != i) return false;
    }
    return true;
}

}  // namespace brunnian
