#pragma once

// Dynamic bitset over 64-bit words, sized once at construction.
// Row type for dense adjacency matrices and the search kernels.

#include <cstdint>
#include <vector>

namespace dsg {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    int nwords() const { return static_cast<int>(words_.size()); }
    std::uint64_t word(int w) const { return words_[w]; }
    std::uint64_t& word(int w) { return words_[w]; }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : words_) w = 0; }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // Lowest set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (w << 6) + __builtin_ctzll(cur);
            if (++w >= nwords()) return -1;
            cur = words_[w];
        }
    }

    bool intersects(const Bitset& o) const {
        for (int w = 0; w < nwords(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    int and_count(const Bitset& o) const {
        int c = 0;
        for (int w = 0; w < nwords(); ++w)
            c += __builtin_popcountll(words_[w] & o.words_[w]);
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        for (int w = 0; w < nwords(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (int w = 0; w < nwords(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (int w = 0; w < nwords(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }

    bool operator==(const Bitset& o) const = default;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int w = 0; w < nwords(); ++w) {
            std::uint64_t cur = words_[w];
            while (cur) {
                fn((w << 6) + __builtin_ctzll(cur));
                cur &= cur - 1;
            }
        }
    }

private:
    // keep bits past nbits_ zero so count()/any() stay honest
    void trim() {
        if (nbits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
        if (nbits_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace dsg
