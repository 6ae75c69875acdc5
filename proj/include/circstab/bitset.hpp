#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace circstab {

// Dynamic bitset sized at construction. Graphs here stay small (<= 128
// vertices by default), so rows are one or two 64-bit words and all set
// operations are word loops.
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    int count_and(const Bitset& o) const {
        int c = 0;
        for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    bool subset_of(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool proper_subset_of(const Bitset& o) const {
        return subset_of(o) && !(*this == o);
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(nbits_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }
    bool operator<(const Bitset& o) const { return w_ < o.w_; }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    // First set bit at or after i, or -1.
    int next(int i) const {
        while (i < nbits_) {
            uint64_t w = w_[i >> 6] >> (i & 63);
            if (w) return i + std::countr_zero(w);
            i = (i & ~63) + 64;
        }
        return -1;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int nbits_;
    std::vector<uint64_t> w_;
};

}  // namespace circstab
