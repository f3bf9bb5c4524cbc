#include "brunnian/magnus.hpp"

namespace brunnian {

namespace {

constexpr int kMaxNibble = 15;

int key_len(std::uint64_t key) { return static_cast<int>(key >> 60); }

std::uint64_t key_append(std::uint64_t key, int index) {
    int len = key_len(key);
    std::uint64_t out = key & ~(std::uint64_t{0xF} << 60);
    out |= std::uint64_t(len + 1) << 60;
    out |= std::uint64_t(index) << (56 - 4 * len);
    return out;
}

}  // namespace

NCPoly::NCPoly(int rank, int cutoff) : rank_(rank), cutoff_(cutoff) {
    if (rank < 1 || rank > kMaxNibble)
        throw parse_error("NCPoly rank must be in 1..15");
    if (cutoff < 1 || cutoff > kMaxNibble)
        throw parse_error("NCPoly cutoff must be in 1..15");
}

NCPoly NCPoly::one(int rank, int cutoff) {
    NCPoly p(rank, cutoff);
    p.terms_[0] = 1;
    return p;
}

bool NCPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

std::uint64_t NCPoly::pack(const std::vector<int>& mono, int rank, int cutoff) {
    if (static_cast<int>(mono.size()) > cutoff)
        throw parse_error("monomial length exceeds cutoff");
    std::uint64_t key = 0;
    for (int i : mono) {
        if (i < 1 || i > rank) throw parse_error("monomial index out of range");
        key = key_append(key, i);
    }
    return key;
}

std::vector<int> NCPoly::unpack(std::uint64_t key) {
    int len = key_len(key);
    std::vector<int> mono(len);
    for (int j = 0; j < len; ++j)
        mono[j] = static_cast<int>((key >> (56 - 4 * j)) & 0xF);
    return mono;
}

void NCPoly::add_term(const std::vector<int>& mono, const bigint& c) {
    if (c == 0) return;
    std::uint64_t key = pack(mono, rank_, cutoff_);
    bigint& slot = terms_[key];
    slot += c;
    if (slot == 0) terms_.erase(key);
}

bigint NCPoly::coefficient_of(const std::vector<int>& mono) const {
    if (static_cast<int>(mono.size()) > cutoff_)
        throw parse_error("index sequence longer than the cutoff");
    auto it = terms_.find(pack(mono, rank_, cutoff_));
    return it == terms_.end() ? bigint(0) : it->second;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (o.rank_ != rank_ || o.cutoff_ != cutoff_)
        throw parse_error("rank/cutoff mismatch in NCPoly sum");
    for (const auto& [key, c] : o.terms_) {
        bigint& slot = terms_[key];
        slot += c;
        if (slot == 0) terms_.erase(key);
    }
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly out(rank_, cutoff_);
    for (const auto& [key, c] : terms_) out.terms_[key] = -c;
    return out;
}

NCPoly nc_mul(const NCPoly& p, const NCPoly& q) {
    if (p.rank_ != q.rank_ || p.cutoff_ != q.cutoff_)
        throw parse_error("rank/cutoff mismatch in NCPoly product");
    NCPoly out(p.rank_, p.cutoff_);
    for (const auto& [kp, cp] : p.terms_) {
        int lp = key_len(kp);
        for (const auto& [kq, cq] : q.terms_) {
            int lq = key_len(kq);
            if (lp + lq > p.cutoff_) continue;
            // concatenate: shift q's letters below p's
            std::uint64_t key = kp;
            for (int j = 0; j < lq; ++j)
                key = key_append(key, static_cast<int>((kq >> (56 - 4 * j)) & 0xF));
            bigint& slot = out.terms_[key];
            slot += cp * cq;
            if (slot == 0) out.terms_.erase(key);
        }
    }
    return out;
}

NCPoly magnus_expand(const FreeWord& w, int cutoff) {
    if (cutoff < 1) throw parse_error("magnus cutoff must be >= 1");
    int rank = w.rank();
    NCPoly p = NCPoly::one(rank, cutoff);
    for (int l : w.letters()) {
        int i = l > 0 ? l : -l;
        if (l > 0) {
            // p <- p (1 + X_i)
            NCPoly shifted(rank, cutoff);
            for (const auto& [key, c] : p.terms_)
                if (key_len(key) < cutoff) shifted.terms_[key_append(key, i)] = c;
            p += shifted;
        } else {
            // p <- p (1 - X_i + X_i^2 - ...)
            NCPoly acc = p;
            NCPoly cur = p;
            for (int k = 1; k <= cutoff; ++k) {
                NCPoly next(rank, cutoff);
                for (const auto& [key, c] : cur.terms_)
                    if (key_len(key) < cutoff) next.terms_[key_append(key, i)] = -c;
                if (next.terms_.empty()) break;
                acc += next;
                cur = std::move(next);
            }
            p = std::move(acc);
        }
    }
    return p;
}

bigint coefficient(const NCPoly& p, const std::vector<int>& index_seq) {
    return p.coefficient_of(index_seq);
}

}  // namespace brunnian
