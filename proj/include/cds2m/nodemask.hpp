#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace cds2m {

// Fixed-universe set of node ids backed by 64-bit words. Bits above the
// universe size are never set, so popcounts and comparisons stay exact.
class NodeMask {
public:
    NodeMask() = default;
    explicit NodeMask(int universe)
        : n_(universe), words_((static_cast<size_t>(universe) + 63) / 64, 0) {}

    int universe_size() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        words_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        words_[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    NodeMask& operator|=(const NodeMask& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    NodeMask& operator&=(const NodeMask& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // Set difference: removes every element of `o`.
    NodeMask& and_not(const NodeMask& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool intersects(const NodeMask& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersect_count(const NodeMask& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool is_subset_of(const NodeMask& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const NodeMask& o) const = default;

    // Visits members in ascending id order.
    template <class F>
    void for_each(F&& f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<int>(w * 64 + static_cast<size_t>(std::countr_zero(bits))));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static NodeMask of(int universe, const std::vector<int>& members) {
        NodeMask m(universe);
        for (int v : members) m.set(v);
        return m;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace cds2m
