#pragma once

#include <cstdint>
#include <vector>

#include "gr1/bitset_kernels.hpp"

namespace gr1 {

using StateIndex = uint32_t;

/**
 * Fixed-universe bit set over state indices [0, size()). All boolean algebra
 * goes through the runtime-dispatched kernels; tail bits past size() are kept
 * zero as an invariant so whole-word comparisons are exact.
 */
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(uint64_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static StateSet empty_set(uint64_t nbits) { return StateSet(nbits); }
    static StateSet full_set(uint64_t nbits) {
        StateSet s(nbits);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.mask_tail();
        return s;
    }

    uint64_t size() const { return nbits_; }
    size_t word_count() const { return words_.size(); }
    const uint64_t* data() const { return words_.data(); }

    void set(StateIndex i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(StateIndex i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(StateIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    uint64_t count() const { return active_kernels().popcount(words_.data(), words_.size()); }
    bool any() const { return active_kernels().any(words_.data(), words_.size()); }
    bool none() const { return !any(); }

    bool operator==(const StateSet& o) const {
        return nbits_ == o.nbits_ && active_kernels().equal(words_.data(), o.words_.data(), words_.size());
    }
    bool operator!=(const StateSet& o) const { return !(*this == o); }

    bool is_subset_of(const StateSet& o) const {
        return active_kernels().subset(words_.data(), o.words_.data(), words_.size());
    }
    bool intersects(const StateSet& o) const {
        return active_kernels().intersects(words_.data(), o.words_.data(), words_.size());
    }

    StateSet& operator&=(const StateSet& o) {
        active_kernels().land(words_.data(), words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    StateSet& operator|=(const StateSet& o) {
        active_kernels().lor(words_.data(), words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    StateSet& operator^=(const StateSet& o) {
        active_kernels().lxor(words_.data(), words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    // set difference: this & ~o
    StateSet& subtract(const StateSet& o) {
        active_kernels().landnot(words_.data(), words_.data(), o.words_.data(), words_.size());
        return *this;
    }

    friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
    friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
    friend StateSet operator^(StateSet a, const StateSet& b) { return a ^= b; }
    friend StateSet operator-(StateSet a, const StateSet& b) { return a.subtract(b); }

    StateSet complement() const {
        StateSet r(nbits_);
        active_kernels().lnot(r.words_.data(), words_.data(), words_.size());
        r.mask_tail();
        return r;
    }

    // Calls fn(StateIndex) for every member in increasing order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                fn(static_cast<StateIndex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<StateIndex> to_vector() const {
        std::vector<StateIndex> v;
        v.reserve(static_cast<size_t>(count()));
        for_each([&](StateIndex i) { v.push_back(i); });
        return v;
    }

    // Lowest member, or size() when empty.
    uint64_t first() const {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<unsigned>(__builtin_ctzll(words_[w]));
        return nbits_;
    }

private:
    void mask_tail() {
        unsigned rem = nbits_ & 63;
        if (rem && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
    }

    uint64_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace gr1
